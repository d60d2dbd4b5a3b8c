#include <gtest/gtest.h>

#include "combi/error.hpp"
#include "combi/realize.hpp"
#include "support.hpp"

using namespace combi;
using combi::testing::sample;

namespace {

FilledSlot filler(int slot, std::size_t realization, std::string class_id, std::string lemma,
                  Number number = Number::singular, Determiner det = Determiner::none) {
  FilledSlot s;
  s.slot = slot;
  s.realization = realization;
  s.class_id = std::move(class_id);
  s.lemma = std::move(lemma);
  s.number = number;
  s.determiner = det;
  return s;
}

FilledPhrase phrase(Language lang, std::string noun, std::string sense, Number head = Number::singular) {
  FilledPhrase p;
  p.language = lang;
  p.noun = std::move(noun);
  p.sense_id = std::move(sense);
  p.head_number = head;
  return p;
}

}  // namespace

TEST(Determiners, AgreementTables) {
  EXPECT_EQ(determiner_form(Language::es, Determiner::definite, Gender::feminine, Number::plural), "las");
  EXPECT_EQ(determiner_form(Language::es, Determiner::definite, Gender::feminine, Number::singular,
                            Case::nominative, true),
            "el");
  EXPECT_EQ(determiner_form(Language::es, Determiner::indefinite, Gender::masculine, Number::singular), "un");
  EXPECT_EQ(determiner_form(Language::fr, Determiner::definite, Gender::masculine, Number::plural), "les");
  EXPECT_EQ(determiner_form(Language::de, Determiner::definite, Gender::feminine, Number::singular, Case::genitive),
            "der");
  EXPECT_EQ(determiner_form(Language::de, Determiner::definite, Gender::masculine, Number::singular, Case::dative),
            "dem");
  EXPECT_EQ(determiner_form(Language::de, Determiner::indefinite, Gender::feminine, Number::singular,
                            Case::genitive),
            "einer");
  EXPECT_EQ(determiner_form(Language::de, Determiner::indefinite, Gender::neuter, Number::plural), "");
  EXPECT_EQ(determiner_form(Language::es, Determiner::none, Gender::masculine, Number::singular), "");
}

TEST(Rewrites, SpanishContractions) {
  auto toks = apply_rewrites(Language::es, {{"de", false, false}, {"el", false, true}, {"niño", false, false}});
  EXPECT_EQ(join_tokens(toks), "del niño");
  toks = apply_rewrites(Language::es, {{"a", false, false}, {"el", false, true}, {"campanario", false, false}});
  EXPECT_EQ(join_tokens(toks), "al campanario");
}

TEST(Rewrites, FrenchElisionThenContraction) {
  auto toks = apply_rewrites(Language::fr, {{"de", false, false}, {"le", false, true}, {"dos", false, false}});
  EXPECT_EQ(join_tokens(toks), "du dos");
  toks = apply_rewrites(Language::fr, {{"de", false, false}, {"les", false, true}, {"enfants", true, false}});
  EXPECT_EQ(join_tokens(toks), "des enfants");
  toks = apply_rewrites(Language::fr, {{"à", false, false}, {"le", false, true}, {"dos", false, false}});
  EXPECT_EQ(join_tokens(toks), "au dos");
  toks = apply_rewrites(Language::fr, {{"à", false, false}, {"les", false, true}, {"genoux", false, false}});
  EXPECT_EQ(join_tokens(toks), "aux genoux");
  // Elision first: de + le + enfant must not become "du enfant".
  toks = apply_rewrites(Language::fr, {{"de", false, false}, {"le", false, true}, {"enfant", true, false}});
  EXPECT_EQ(join_tokens(toks), "de l'enfant");
  toks = apply_rewrites(Language::fr, {{"de", false, false}, {"essence", true, false}});
  EXPECT_EQ(join_tokens(toks), "d'essence");
}

TEST(Rewrites, GermanPrepositionArticleFusion) {
  auto toks = apply_rewrites(Language::de, {{"von", false, false}, {"dem", false, true}, {"Arzt", false, false}});
  EXPECT_EQ(join_tokens(toks), "vom Arzt");
  toks = apply_rewrites(Language::de, {{"nach", false, false}, {"dem", false, true}, {"Ergebnis", false, false}});
  EXPECT_EQ(join_tokens(toks), "nach dem Ergebnis");
}

TEST(Realize, FigureFourPhrase) {
  FilledPhrase p = phrase(Language::es, "olor", "olfato");
  p.slots = {filler(1, 0, "material.sustancia.liquido_no_consumible", "aguarrás"),
             filler(2, 0, "lugar.construccion.habitacion", "solana", Number::plural, Determiner::definite)};
  EXPECT_EQ(realize_np(sample(), p), "el olor a aguarrás de las solanas");
  p.slots[1] = filler(2, 0, "lugar.construccion.habitacion", "campanario", Number::singular, Determiner::definite);
  EXPECT_EQ(realize_np(sample(), p), "el olor a aguarrás del campanario");
}

TEST(Realize, FigureFivePhrase) {
  FilledPhrase p = phrase(Language::fr, "mort", "deces");
  p.slots = {filler(1, 0, "animado.humano.familia", "nouveau-née", Number::singular, Determiner::definite),
             filler(2, 0, "proceso.natural.patologico", "pneumonie")};
  EXPECT_EQ(realize_np(sample(), p), "la mort de la nouveau-née par pneumonie");
  p.slots[0].lemma = "nourrisson";
  EXPECT_EQ(realize_np(sample(), p), "la mort du nourrisson par pneumonie");
}

TEST(Realize, FrenchElidedHeadAndFiller) {
  FilledPhrase p = phrase(Language::fr, "odeur", "olfaction");
  p.slots = {filler(1, 0, "material.sustancia.aroma", "essence")};
  EXPECT_EQ(realize_np(sample(), p), "l'odeur d'essence");
}

TEST(Realize, GermanGenitiveAndCompound) {
  FilledPhrase p = phrase(Language::de, "Frage", "erkundigung");
  p.slots = {filler(2, 1, "situacion.social.problema", "Arbeitslosigkeit", Number::singular, Determiner::definite)};
  EXPECT_EQ(realize_np(sample(), p), "die Frage der Arbeitslosigkeit");
  p.slots = {filler(2, 2, "tiempo.perspectiva", "Zukunft")};
  EXPECT_EQ(realize_np(sample(), p), "die Zukunftsfrage");
}

TEST(Realize, GermanPairedAndApposition) {
  FilledPhrase p = phrase(Language::de, "Aufenthalt", "verweilen");
  FilledSlot months = filler(3, 0, "tiempo.mes", "November");
  months.paired = PairedFiller{"Dezember", Number::singular, Determiner::none};
  p.slots = {months};
  EXPECT_EQ(realize_np(sample(), p), "der Aufenthalt von November bis Dezember");
  p.head_determiner = Determiner::none;
  p.slots = {filler(3, 3, "tiempo.duracion", "2 Tage", Number::plural)};
  EXPECT_EQ(realize_np(sample(), p), "2 Tage Aufenthalt");
}

TEST(Realize, AdjectiveAgreement) {
  const Lexicon& lex = sample();
  EXPECT_EQ(adjective_form(lex, Language::es, "agradable", Gender::masculine, Number::plural, Case::nominative),
            "agradables");
  FilledPhrase p = phrase(Language::de, "Frage", "erkundigung");
  p.head_adjectives = {{"lustig", true}};
  p.slots = {filler(1, 0, "animado.humano.condicion_humana", "Studentin", Number::singular, Determiner::definite)};
  EXPECT_EQ(realize_np(lex, p), "die lustige Frage der Studentin");
}

TEST(Realize, MissingFormIsARealizationError) {
  FilledPhrase p = phrase(Language::fr, "mort", "deces", Number::plural);
  p.slots = {filler(1, 0, "animado.humano.familia", "nourrisson", Number::plural, Determiner::definite),
             filler(2, 0, "proceso.natural.patologico", "éclampsie", Number::plural)};
  try {
    realize_np(sample(), p);
    FAIL() << "expected RealizationError";
  } catch (const RealizationError& e) {
    EXPECT_EQ(e.lemma(), "éclampsie");
  }
}
