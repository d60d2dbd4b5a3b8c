#pragma once

// Structure templates from a class selection, and restricted-random phrase
// generation over them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "combi/lexicon.hpp"
#include "combi/realize.hpp"

namespace combi {

class VectorSpace;

// slot index -> selected class id
using ClassSelection = std::map<int, std::string>;

// "1:material.sustancia,2:lugar.construccion"
ClassSelection parse_selection(std::string_view text);
std::string format_selection(const ClassSelection& selection);

struct SlotChoice {
  int slot = 1;
  std::string role;
  std::string class_id;
  std::size_t realization = 0;

  bool operator==(const SlotChoice&) const = default;
};

struct StructureTemplate {
  std::string id;  // "sg/1:0,2:0": head number, then slot:realization pairs
  Language language = Language::es;
  std::string noun;
  std::string sense_id;
  Number head_number = Number::singular;
  std::vector<SlotChoice> slots;  // surface order
  std::string standard_example;

  bool operator==(const StructureTemplate&) const = default;
};

std::vector<StructureTemplate> enumerate_structures(const Lexicon& lex, Language language,
                                                    std::string_view noun, std::string_view sense_id,
                                                    const ClassSelection& selection);

// Template with the given id; NotFoundError when the selection does not yield it.
StructureTemplate find_structure(const Lexicon& lex, Language language, std::string_view noun,
                                 std::string_view sense_id, const ClassSelection& selection,
                                 std::string_view template_id);

struct TraceItem {
  int slot = 1;
  std::string role;
  std::string class_id;
  std::string lemma;
  Number number = Number::singular;
  Determiner determiner = Determiner::none;
  std::optional<PairedFiller> paired;

  bool operator==(const TraceItem&) const = default;
};

struct GeneratedPhrase {
  std::string surface;
  std::vector<TraceItem> trace;
  std::uint64_t seed = 0;
  std::optional<double> score;

  bool operator==(const GeneratedPhrase&) const = default;
};

struct GenerateOptions {
  std::uint64_t seed = 0;
  std::size_t limit = 20;
  const VectorSpace* filter = nullptr;
};

// Up to `limit` distinct phrases. Lemmas vary, roles and classes never do.
std::vector<GeneratedPhrase> generate_phrases(const Lexicon& lex, const StructureTemplate& tmpl,
                                              const GenerateOptions& options);

// Every phrase the template admits, in combination order.
std::vector<GeneratedPhrase> enumerate_phrases(const Lexicon& lex, const StructureTemplate& tmpl);

// Number of filler combinations the template admits.
std::uint64_t combination_count(const Lexicon& lex, const StructureTemplate& tmpl);

FilledPhrase to_filled(const StructureTemplate& tmpl, const std::vector<TraceItem>& trace);

}  // namespace combi
