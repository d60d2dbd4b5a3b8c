#include "combi/realize.hpp"

#include <array>

#include "combi/error.hpp"
#include "combi/text.hpp"

namespace combi {

namespace {

// Rows: masculine, feminine, neuter, plural. Columns: nom, acc, dat, gen.
using CaseTable = std::array<std::array<const char*, 4>, 4>;

constexpr CaseTable kGermanDefinite{{
    {"der", "den", "dem", "des"},
    {"die", "die", "der", "der"},
    {"das", "das", "dem", "des"},
    {"die", "die", "den", "der"},
}};

constexpr CaseTable kGermanIndefinite{{
    {"ein", "einen", "einem", "eines"},
    {"eine", "eine", "einer", "einer"},
    {"ein", "ein", "einem", "eines"},
    {"", "", "", ""},
}};

int row_of(Gender gender, Number number) {
  if (number == Number::plural) return 3;
  switch (gender) {
    case Gender::feminine:
      return 1;
    case Gender::neuter:
      return 2;
    default:
      return 0;
  }
}

Token word(std::string text, bool vowel) { return Token{std::move(text), vowel, false}; }

Token determiner_token(std::string text) {
  bool vowel = text::vowel_initial(text);
  return Token{std::move(text), vowel, true};
}

std::string form_or_throw(const LexicalEntry& entry, Number number, Case grammatical_case,
                          Gender agreement = Gender::none) {
  auto form = entry.form(number, grammatical_case, agreement);
  if (!form) {
    FormKey key{number, grammatical_case, agreement};
    throw RealizationError(entry.lemma, format_form_key(key),
                           "\"" + entry.lemma + "\" has no form " + format_form_key(key));
  }
  return *form;
}

const LexicalEntry& entry_or_throw(const Lexicon& lex, Language language, std::string_view lemma) {
  const LexicalEntry* e = lex.entry(language, lemma);
  if (!e) {
    throw RealizationError(std::string(lemma), "", "unknown lemma \"" + std::string(lemma) + "\"");
  }
  return *e;
}

void push_nominal(std::vector<Token>& out, const Lexicon& lex, Language language,
                  std::string_view lemma, Number number, Determiner det, Case grammatical_case) {
  const LexicalEntry& e = entry_or_throw(lex, language, lemma);
  if (det != Determiner::none && !e.proper) {
    std::string d = determiner_form(language, det, e.gender, number, grammatical_case,
                                    e.stressed_a);
    if (!d.empty()) out.push_back(determiner_token(std::move(d)));
  }
  out.push_back(word(form_or_throw(e, number, grammatical_case), e.vowel_initial));
}

struct Rewrite {
  const char* first;
  const char* second;
  const char* result;
};

constexpr std::array<Rewrite, 4> kFrenchContractions{{
    {"de", "le", "du"},
    {"de", "les", "des"},
    {"à", "le", "au"},
    {"à", "les", "aux"},
}};

constexpr std::array<Rewrite, 2> kSpanishContractions{{
    {"de", "el", "del"},
    {"a", "el", "al"},
}};

constexpr std::array<Rewrite, 8> kGermanContractions{{
    {"von", "dem", "vom"},
    {"in", "dem", "im"},
    {"an", "dem", "am"},
    {"zu", "dem", "zum"},
    {"zu", "der", "zur"},
    {"bei", "dem", "beim"},
    {"in", "das", "ins"},
    {"an", "das", "ans"},
}};

template <std::size_t N>
std::vector<Token> contract(std::vector<Token> tokens, const std::array<Rewrite, N>& table) {
  std::vector<Token> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i + 1 < tokens.size() && tokens[i + 1].is_determiner) {
      bool merged = false;
      for (const Rewrite& r : table) {
        if (tokens[i].text == r.first && tokens[i + 1].text == r.second) {
          out.push_back(Token{r.result, tokens[i].vowel_initial, false});
          ++i;
          merged = true;
          break;
        }
      }
      if (merged) continue;
    }
    out.push_back(std::move(tokens[i]));
  }
  return out;
}

}  // namespace

std::string determiner_form(Language language, Determiner det, Gender gender, Number number,
                            Case grammatical_case, bool stressed_a) {
  if (det == Determiner::none) return {};
  bool fem = gender == Gender::feminine;
  bool sg = number == Number::singular;
  switch (language) {
    case Language::es:
      if (det == Determiner::definite) {
        if (sg) return fem && !stressed_a ? "la" : "el";
        return fem ? "las" : "los";
      }
      if (sg) return fem && !stressed_a ? "una" : "un";
      return fem ? "unas" : "unos";
    case Language::fr:
      if (det == Determiner::definite) return sg ? (fem ? "la" : "le") : "les";
      return sg ? (fem ? "une" : "un") : "des";
    case Language::de: {
      const CaseTable& table = det == Determiner::definite ? kGermanDefinite : kGermanIndefinite;
      return table[row_of(gender, number)][static_cast<int>(grammatical_case)];
    }
  }
  return {};
}

std::string adjective_form(const Lexicon& lex, Language language, std::string_view adjective,
                           Gender gender, Number number, Case grammatical_case) {
  const LexicalEntry& e = entry_or_throw(lex, language, adjective);
  Gender agreement = gender == Gender::none ? Gender::masculine : gender;
  return form_or_throw(e, number, grammatical_case, agreement);
}

std::vector<Token> np_tokens(const Lexicon& lex, const FilledPhrase& phrase) {
  const ArgumentSchema& schema = require_schema(lex, phrase.language, phrase.noun, phrase.sense_id);
  const LexicalEntry& head = entry_or_throw(lex, phrase.language, phrase.noun);
  const Language lang = phrase.language;

  std::vector<Token> leading;      // apposition fillers rendered before the head
  std::vector<Token> prenominal;   // adjectives between determiner and head
  std::vector<Token> postnominal;  // adjectives right after the head
  std::vector<Token> trailing;     // phrasal complements
  std::string compound_prefix;
  bool head_determiner_allowed = true;

  for (const HeadAdjective& adj : phrase.head_adjectives) {
    Token t = word(adjective_form(lex, lang, adj.lemma, head.gender, phrase.head_number, phrase.head_case),
                   false);
    t.vowel_initial = text::vowel_initial(t.text);
    (adj.prenominal ? prenominal : postnominal).push_back(std::move(t));
  }

  for (const FilledSlot& filled : phrase.slots) {
    const ArgumentSlot* slot = schema.slot(filled.slot);
    if (!slot || filled.realization >= slot->realizations.size()) {
      throw RealizationError(filled.lemma, "", "slot " + std::to_string(filled.slot) +
                                                   " has no realization " +
                                                   std::to_string(filled.realization));
    }
    const FormalRealization& r = slot->realizations[filled.realization];
    switch (r.kind) {
      case RealizationKind::prepositional: {
        trailing.push_back(word(r.preposition, text::vowel_initial(r.preposition)));
        push_nominal(trailing, lex, lang, filled.lemma, filled.number, filled.determiner,
                     r.case_government.value_or(Case::nominative));
        if (filled.paired && slot->paired) {
          const PairedRealization& p = *slot->paired;
          trailing.push_back(word(p.preposition, text::vowel_initial(p.preposition)));
          push_nominal(trailing, lex, lang, filled.paired->lemma, filled.paired->number,
                       filled.paired->determiner, p.case_government.value_or(Case::nominative));
        }
        break;
      }
      case RealizationKind::genitive:
        push_nominal(trailing, lex, lang, filled.lemma, filled.number, filled.determiner,
                     Case::genitive);
        break;
      case RealizationKind::apposition:
        if (r.filler_first) {
          push_nominal(leading, lex, lang, filled.lemma, filled.number, Determiner::none,
                       phrase.head_case);
          head_determiner_allowed = false;
        } else {
          push_nominal(trailing, lex, lang, filled.lemma, filled.number, Determiner::none,
                       r.case_government.value_or(phrase.head_case));
        }
        break;
      case RealizationKind::compound: {
        const LexicalEntry& e = entry_or_throw(lex, lang, filled.lemma);
        if (e.compound_form.empty()) {
          throw RealizationError(e.lemma, "compound", "\"" + e.lemma + "\" has no compound form");
        }
        compound_prefix += e.compound_form;
        break;
      }
      case RealizationKind::adjectival: {
        Token t = word(adjective_form(lex, lang, filled.lemma, head.gender, phrase.head_number,
                                      phrase.head_case),
                       false);
        t.vowel_initial = text::vowel_initial(t.text);
        (lang == Language::de ? prenominal : postnominal).push_back(std::move(t));
        break;
      }
    }
  }

  std::vector<Token> out = std::move(leading);
  std::string head_form = form_or_throw(head, phrase.head_number, phrase.head_case);
  bool head_vowel = head.vowel_initial;
  if (!compound_prefix.empty()) {
    head_form = compound_prefix + text::lowercase_first(head_form);
    head_vowel = text::vowel_initial(head_form);
  }
  if (head_determiner_allowed && phrase.head_determiner != Determiner::none) {
    std::string d = determiner_form(lang, phrase.head_determiner, head.gender, phrase.head_number,
                                    phrase.head_case, head.stressed_a && prenominal.empty());
    if (!d.empty()) out.push_back(determiner_token(std::move(d)));
  }
  for (Token& t : prenominal) out.push_back(std::move(t));
  out.push_back(word(std::move(head_form), head_vowel));
  for (Token& t : postnominal) out.push_back(std::move(t));
  for (Token& t : trailing) out.push_back(std::move(t));
  return out;
}

std::vector<Token> apply_rewrites(Language language, std::vector<Token> tokens) {
  switch (language) {
    case Language::es:
      return contract(std::move(tokens), kSpanishContractions);
    case Language::fr: {
      for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        Token& t = tokens[i];
        if (!tokens[i + 1].vowel_initial) continue;
        if (t.is_determiner && (t.text == "le" || t.text == "la")) {
          t.text = "l'";
        } else if (!t.is_determiner && t.text == "de") {
          t.text = "d'";
        }
      }
      return contract(std::move(tokens), kFrenchContractions);
    }
    case Language::de:
      return contract(std::move(tokens), kGermanContractions);
  }
  return tokens;
}

std::string join_tokens(const std::vector<Token>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && !(out.size() && out.back() == '\'')) out += ' ';
    out += tokens[i].text;
  }
  return out;
}

std::string realize_np(const Lexicon& lex, const FilledPhrase& phrase) {
  return join_tokens(apply_rewrites(phrase.language, np_tokens(lex, phrase)));
}

}  // namespace combi
