#pragma once

// Clause frames hosting a generated noun phrase, and the polarity checks that
// keep adjectives and attributes compatible with it.

#include <optional>
#include <string>
#include <vector>

#include "combi/constraints.hpp"
#include "combi/generator.hpp"

namespace combi {

namespace rule {
inline constexpr const char* kPolarityClash = "polarity-clash";
inline constexpr const char* kClassConnotation = "class-connotation";
}  // namespace rule

// Frames of a noun sense in declaration order; all positions when `position`
// is nullopt.
std::vector<const SentenceFrame*> list_frames(const Lexicon& lex, Language language,
                                              std::string_view noun, std::string_view sense_id,
                                              std::optional<VerbPosition> position = std::nullopt);

struct Sentence {
  std::string text;
  std::string np_surface;  // the hosted NP on its own, nominative, with its adjectives
  std::string frame_id;
  std::vector<std::string> adjectives;  // NP adjectives and attributes, lemmas
  GeneratedPhrase np;

  bool operator==(const Sentence&) const = default;
};

struct SentenceOptions {
  std::uint64_t seed = 0;
  std::size_t limit = 20;
};

// FrameIncompleteError when no verb of the frame suits the template's classes.
std::vector<Sentence> generate_sentences(const Lexicon& lex, const SentenceFrame& frame,
                                         const StructureTemplate& tmpl, const SentenceOptions& options);

// (i) two adjectives of opposite polarity; (ii) an adjective whose polarity
// contradicts the connotation of a filler's class.
ConstraintResult check_adjective_compat(const Lexicon& lex, Language language,
                                        const std::vector<std::string>& adjectives,
                                        const std::vector<TraceItem>& trace);

}  // namespace combi
