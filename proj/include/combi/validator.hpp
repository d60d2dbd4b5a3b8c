#pragma once

// Tentative-consultive mode: a user phrase is chunked against the lexicon,
// every reading is unified with the head's schemas, and the reading with the
// fewest violations decides the verdict.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "combi/constraints.hpp"
#include "combi/generator.hpp"

namespace combi {

namespace rule {
inline constexpr const char* kUnknownToken = "unknown-token";
inline constexpr const char* kNoSlotMatch = "no-slot-match";
}  // namespace rule

enum class VerdictStatus { accepted, rejected, unknown_head };
std::string_view verdict_name(VerdictStatus status);

// Half-open token range of the normalized input.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

struct Diagnosis {
  std::string rule;
  std::string message;
  Span span;

  bool operator==(const Diagnosis&) const = default;
};

enum class ChunkRole { filler, paired, modifier };

struct Chunk {
  RealizationKind kind = RealizationKind::prepositional;
  std::string preposition;
  Determiner determiner = Determiner::none;
  std::string lemma;
  Number number = Number::singular;
  ChunkRole role = ChunkRole::filler;
  int slot = 0;  // 0 for modifiers
  Span span;
};

struct ParsedNP {
  std::string head;
  Number head_number = Number::singular;
  Determiner head_determiner = Determiner::none;
  std::vector<std::string> head_adjectives;
  std::vector<Chunk> chunks;
  std::vector<std::string> tokens;  // normalized, contractions expanded
};

struct Verdict {
  VerdictStatus status = VerdictStatus::unknown_head;
  std::optional<std::string> sense_id;
  std::optional<std::string> template_id;
  std::vector<TraceItem> trace;
  std::vector<Diagnosis> diagnoses;
  std::vector<std::string> notes;
  std::optional<ParsedNP> parse;

  bool accepted() const { return status == VerdictStatus::accepted; }
};

// Holds the lowercase form index of one lexicon. Cheap to query, immutable.
class PhraseMatcher {
 public:
  explicit PhraseMatcher(const Lexicon& lex);
  ~PhraseMatcher();
  PhraseMatcher(PhraseMatcher&&) noexcept;
  PhraseMatcher& operator=(PhraseMatcher&&) noexcept;

  Verdict validate(Language language, std::string_view text) const;
  // Best reading's chunking; nullopt when the head is unknown.
  std::optional<ParsedNP> parse(Language language, std::string_view text) const;
  // A clause containing one noun phrase: the phrase is validated and every
  // adjective of the clause is checked against it for polarity.
  Verdict validate_sentence(Language language, std::string_view text) const;

  struct Index;

 private:
  const Lexicon* lex_;
  std::unique_ptr<Index> index_;
};

Verdict validate_phrase(const Lexicon& lex, Language language, std::string_view text);
std::optional<ParsedNP> parse_np(const Lexicon& lex, Language language, std::string_view text);
Verdict validate_sentence(const Lexicon& lex, Language language, std::string_view text);

// Input split into lowercase tokens: braces and the final period removed,
// French elisions split off, contractions expanded.
std::vector<std::string> normalize_tokens(Language language, std::string_view text);

}  // namespace combi
