#pragma once

// Surface realization of a filled noun phrase: determiner choice, form lookup,
// per-language contraction and elision, token joining.

#include <optional>
#include <string>
#include <vector>

#include "combi/lexicon.hpp"

namespace combi {

// Second endpoint of a paired realization (von November bis Dezember).
struct PairedFiller {
  std::string lemma;
  Number number = Number::singular;
  Determiner determiner = Determiner::none;

  bool operator==(const PairedFiller&) const = default;
};

struct FilledSlot {
  int slot = 1;
  std::size_t realization = 0;  // index into the slot's realizations
  std::string class_id;
  std::string lemma;
  Number number = Number::singular;
  Determiner determiner = Determiner::none;
  std::optional<PairedFiller> paired;

  bool operator==(const FilledSlot&) const = default;
};

struct HeadAdjective {
  std::string lemma;
  bool prenominal = true;

  bool operator==(const HeadAdjective&) const = default;
};

struct FilledPhrase {
  Language language = Language::es;
  std::string noun;
  std::string sense_id;
  Number head_number = Number::singular;
  Determiner head_determiner = Determiner::definite;
  Case head_case = Case::nominative;
  std::vector<HeadAdjective> head_adjectives;
  // In surface order.
  std::vector<FilledSlot> slots;

  bool operator==(const FilledPhrase&) const = default;
};

struct Token {
  std::string text;
  bool vowel_initial = false;
  bool is_determiner = false;
};

// Determiner word for the given agreement features; empty for Determiner::none
// and for the German indefinite plural.
std::string determiner_form(Language language, Determiner det, Gender gender, Number number,
                            Case grammatical_case = Case::nominative, bool stressed_a = false);

// Tokens of the noun phrase before contraction. RealizationError when a
// lemma lacks the form the phrase needs.
std::vector<Token> np_tokens(const Lexicon& lex, const FilledPhrase& phrase);

// Applies the language's ordered rewrite table (elision, then contraction).
std::vector<Token> apply_rewrites(Language language, std::vector<Token> tokens);

// Joins with single spaces; nothing follows an apostrophe.
std::string join_tokens(const std::vector<Token>& tokens);

std::string realize_np(const Lexicon& lex, const FilledPhrase& phrase);

// Form of an adjective agreeing with a head noun.
std::string adjective_form(const Lexicon& lex, Language language, std::string_view adjective,
                           Gender gender, Number number, Case grammatical_case);

}  // namespace combi
