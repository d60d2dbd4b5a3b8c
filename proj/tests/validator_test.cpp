#include <gtest/gtest.h>

#include <algorithm>

#include "combi/validator.hpp"
#include "support.hpp"

using namespace combi;
using combi::testing::sample;

namespace {

const PhraseMatcher& matcher() {
  static const PhraseMatcher m(sample());
  return m;
}

bool has_rule(const Verdict& v, const std::string& rule) {
  return std::any_of(v.diagnoses.begin(), v.diagnoses.end(), [&](const Diagnosis& d) { return d.rule == rule; });
}

}  // namespace

TEST(Normalize, TokensAndContractions) {
  EXPECT_EQ(normalize_tokens(Language::es, "El dolor del niño."),
            (std::vector<std::string>{"el", "dolor", "de", "el", "niño"}));
  EXPECT_EQ(normalize_tokens(Language::fr, "l'odeur d'essence"),
            (std::vector<std::string>{"l'", "odeur", "de", "essence"}));
  EXPECT_EQ(normalize_tokens(Language::fr, "la douleur au dos"),
            (std::vector<std::string>{"la", "douleur", "à", "le", "dos"}));
  EXPECT_EQ(normalize_tokens(Language::de, "die {lustige} Frage"),
            (std::vector<std::string>{"die", "lustige", "frage"}));
}

TEST(Validate, AcceptsRecordedStructures) {
  Verdict v = matcher().validate(Language::es, "el olor a aguarrás de las solanas");
  ASSERT_TRUE(v.accepted());
  EXPECT_EQ(v.sense_id, "olfato");
  ASSERT_EQ(v.trace.size(), 2u);
  EXPECT_EQ(v.trace[0].lemma, "aguarrás");
  EXPECT_EQ(v.trace[1].lemma, "solana");
  EXPECT_EQ(v.trace[1].number, Number::plural);
  EXPECT_TRUE(v.template_id);
}

TEST(Validate, NumberCoRestriction) {
  Verdict v = matcher().validate(Language::es, "las muertes del niño");
  EXPECT_EQ(v.status, VerdictStatus::rejected);
  EXPECT_TRUE(has_rule(v, "number-co-restriction"));
  EXPECT_TRUE(matcher().validate(Language::es, "las muertes de los niños").accepted());
}

TEST(Validate, DeterminerChangesTheReading) {
  EXPECT_TRUE(matcher().validate(Language::es, "el dolor de dientes de la enferma").accepted());
  EXPECT_TRUE(matcher().validate(Language::es, "El dolor de cabeza de los enfermos").accepted());
  EXPECT_TRUE(matcher().validate(Language::es, "el dolor de huesos").accepted());
}

TEST(Validate, InterdependenceNamesTheMissingRole) {
  Verdict v = matcher().validate(Language::de, "Die Flucht von Madrid");
  ASSERT_EQ(v.status, VerdictStatus::rejected);
  auto it = std::find_if(v.diagnoses.begin(), v.diagnoses.end(),
                         [](const Diagnosis& d) { return d.rule == "slot-interdependence"; });
  ASSERT_NE(it, v.diagnoses.end());
  EXPECT_NE(it->message.find("Dirección"), std::string::npos) << it->message;
  EXPECT_TRUE(matcher().validate(Language::de, "Die Flucht von Madrid nach Santiago").accepted());
}

TEST(Validate, PairedRealization) {
  EXPECT_TRUE(has_rule(matcher().validate(Language::de, "Der Aufenthalt von November"), "paired-realization"));
  EXPECT_TRUE(matcher().validate(Language::de, "Der Aufenthalt von November bis Dezember").accepted());
  EXPECT_TRUE(matcher().validate(Language::de, "Der Aufenthalt von 3 Tagen").accepted());
}

TEST(Validate, GermanCompoundsAndAdjectives) {
  EXPECT_TRUE(matcher().validate(Language::de, "die {interessante} Teilnehmerfrage").accepted());
  EXPECT_TRUE(matcher().validate(Language::de, "die {wichtige} Zukunftsfrage").accepted());
  EXPECT_TRUE(matcher().validate(Language::de, "der zweitägige Aufenthalt").accepted());
  EXPECT_TRUE(matcher().validate(Language::de, "der Jahresaufenthalt").accepted());
  EXPECT_TRUE(matcher().validate(Language::de, "2 Tage Aufenthalt").accepted());
}

TEST(Validate, FrenchContractionsAndClassHeadNumber) {
  EXPECT_TRUE(matcher().validate(Language::fr, "la mort du nourrisson par infection").accepted());
  EXPECT_TRUE(matcher().validate(Language::fr, "les odeurs de Paris").accepted());
  EXPECT_TRUE(matcher().validate(Language::fr, "l'odeur d'essence").accepted());
}

TEST(Validate, UnknownHeadAndTokens) {
  Verdict v = matcher().validate(Language::es, "la mesa del comedor");
  EXPECT_EQ(v.status, VerdictStatus::unknown_head);
  EXPECT_FALSE(v.accepted());
  Verdict w = matcher().validate(Language::es, "el olor a zzzz");
  EXPECT_EQ(w.status, VerdictStatus::rejected);
  EXPECT_FALSE(w.diagnoses.empty());
}

TEST(Validate, DiagnosesCarrySpans) {
  Verdict v = matcher().validate(Language::es, "la muerte del niño por intoxicaciones alimentarias");
  ASSERT_EQ(v.status, VerdictStatus::rejected);
  for (const Diagnosis& d : v.diagnoses) {
    EXPECT_LE(d.span.begin, d.span.end);
    EXPECT_LE(d.span.end, v.parse ? v.parse->tokens.size() : 100u);
  }
}

TEST(Parse, ChunksFollowTheInput) {
  auto parse = parse_np(sample(), Language::es, "la muerte del niño por intoxicación alimentaria");
  ASSERT_TRUE(parse);
  EXPECT_EQ(parse->head, "muerte");
  ASSERT_EQ(parse->chunks.size(), 2u);
  EXPECT_EQ(parse->chunks[0].preposition, "de");
  EXPECT_EQ(parse->chunks[0].determiner, Determiner::definite);
  EXPECT_EQ(parse->chunks[1].lemma, "intoxicación alimentaria");
  EXPECT_FALSE(parse_np(sample(), Language::es, "la mesa"));
}

TEST(Sentence, PolarityDiagnoses) {
  Verdict a = matcher().validate_sentence(Language::es, "El agradable olor a excrementos es intenso");
  EXPECT_EQ(a.status, VerdictStatus::rejected);
  EXPECT_TRUE(has_rule(a, "class-connotation"));
  Verdict b = matcher().validate_sentence(Language::es, "El agradable olor a excrementos resulta desagradable.");
  EXPECT_TRUE(has_rule(b, "polarity-clash"));
  EXPECT_TRUE(matcher().validate_sentence(Language::es, "El olor a resina del desván es muy intenso.").accepted());
}

TEST(Validate, FreeFunctionsAgreeWithMatcher) {
  const std::string text = "las muertes de los niños por intoxicaciones alimentarias";
  EXPECT_EQ(validate_phrase(sample(), Language::es, text).accepted(), matcher().validate(Language::es, text).accepted());
  EXPECT_TRUE(validate_sentence(sample(), Language::es, "Se percibe el olor a lejía del aseo.").accepted());
}
