#include <gtest/gtest.h>

#include "json.hpp"

#include "combi/error.hpp"
#include "combi/lexicon.hpp"
#include "support.hpp"

using namespace combi;
using combi::testing::sample;

namespace {

nlohmann::json sample_document() { return nlohmann::json::parse(dump_bundle(sample())); }

}  // namespace

TEST(Bundle, SampleLoadsAndChecksClean) {
  const Lexicon& lex = sample();
  ValidationReport report = validate_bundle(lex);
  for (const Finding& f : report.findings) ADD_FAILURE() << f.code << " " << f.subject << ": " << f.message;
  EXPECT_TRUE(report.clean());
  EXPECT_GE(lex.schemas().size(), 10u);
  EXPECT_EQ(lex.meta().languages.size(), 3u);
}

TEST(Bundle, DumpThenLoadIsIdentity) {
  const Lexicon& lex = sample();
  std::string first = dump_bundle(lex);
  Lexicon again = load_bundle_string(first);
  EXPECT_TRUE(again == lex);
  EXPECT_EQ(dump_bundle(again), first);
}

TEST(Bundle, SyntaxErrorReportsLineAndColumn) {
  try {
    load_bundle_string("{\n  \"meta\": ,\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location().rfind("2:", 0), 0u) << e.location();
  }
}

TEST(Bundle, StructuralErrorReportsPointer) {
  nlohmann::json doc = sample_document();
  doc["nouns"]["es"]["olor"]["senses"][0]["slots"][0]["index"] = "one";
  try {
    load_bundle_string(doc.dump());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location().front(), '/');
  }
}

TEST(Bundle, UnknownRoleIsAnIntegrityError) {
  nlohmann::json doc = sample_document();
  doc["nouns"]["es"]["olor"]["senses"][0]["slots"][0]["role"] = "no_such_role";
  try {
    load_bundle_string(doc.dump());
    FAIL() << "expected IntegrityError";
  } catch (const IntegrityError& e) {
    EXPECT_EQ(e.missing_id(), "no_such_role");
  }
}

TEST(Bundle, UnknownMemberClassIsAnIntegrityError) {
  nlohmann::json doc = sample_document();
  auto& members = doc["nouns"]["es"]["olor"]["senses"][0]["slots"][1]["members"];
  members["lugar.no_such_class"] = nlohmann::json::array({"cocina"});
  EXPECT_THROW(load_bundle_string(doc.dump()), IntegrityError);
}

TEST(FormKey, ParsesAndFormats) {
  auto k = parse_form_key("sg.acc.m");
  ASSERT_TRUE(k);
  EXPECT_EQ(k->number, Number::singular);
  EXPECT_EQ(k->grammatical_case, Case::accusative);
  EXPECT_EQ(k->gender, Gender::masculine);
  EXPECT_EQ(format_form_key(*k), "sg.acc.m");
  EXPECT_EQ(format_form_key(*parse_form_key("pl.dat")), "pl.dat");
  EXPECT_EQ(format_form_key(*parse_form_key("pl")), "pl");
  EXPECT_FALSE(parse_form_key("dual"));
  EXPECT_FALSE(parse_form_key("sg.xx"));
}

TEST(Entry, FormsFallBackToNominative) {
  const LexicalEntry* jahr = sample().entry(Language::de, "Jahr");
  ASSERT_NE(jahr, nullptr);
  EXPECT_EQ(jahr->form(Number::plural, Case::dative), "Jahren");
  EXPECT_EQ(jahr->form(Number::singular, Case::genitive), "Jahres");
  EXPECT_EQ(jahr->form(Number::plural, Case::accusative), "Jahre");
  EXPECT_EQ(jahr->form(Number::singular, Case::dative), "Jahr");
}

TEST(Entry, SingularOnlyNounsLackPlural) {
  const LexicalEntry* e = sample().entry(Language::fr, "éclampsie");
  ASSERT_NE(e, nullptr);
  EXPECT_TRUE(e->has_number(Number::singular));
  EXPECT_FALSE(e->has_number(Number::plural));
  EXPECT_FALSE(e->form(Number::plural));
}

TEST(Lexicon, SchemaLookup) {
  const Lexicon& lex = sample();
  auto senses = schemas_for(lex, Language::es, "dolor");
  ASSERT_EQ(senses.size(), 2u);
  EXPECT_EQ(senses[0].sense_id, "sensacion_fisica");
  EXPECT_EQ(senses[1].sense_id, "sentimiento");
  EXPECT_THROW(schemas_for(lex, Language::es, "mesa"), NotFoundError);
  EXPECT_THROW(require_schema(lex, Language::es, "dolor", "alegria"), NotFoundError);
  const ArgumentSchema& flucht = require_schema(lex, Language::de, "Flucht", "entkommen");
  EXPECT_EQ(flucht.head_number_policy, HeadNumberPolicy::singular_only);
  EXPECT_EQ(flucht.slot(2)->requires_slots, std::set<int>{3});
}

TEST(Lexicon, SurfaceOrderPositions) {
  const ArgumentSchema& dolor = require_schema(sample(), Language::es, "dolor", "sensacion_fisica");
  EXPECT_EQ(dolor.position_of(3), 0u);
  EXPECT_EQ(dolor.position_of(1), 1u);
  EXPECT_EQ(dolor.position_of(2), 2u);
  EXPECT_EQ(dolor.position_of(9), dolor.slots.size());
}

TEST(Lexicon, ClassHierarchy) {
  const Lexicon& lex = sample();
  EXPECT_TRUE(Lexicon::is_within("lugar.construccion.habitacion", "lugar"));
  EXPECT_TRUE(Lexicon::is_within("lugar.construccion", "lugar.construccion"));
  EXPECT_FALSE(Lexicon::is_within("lugar.construccionx", "lugar.construccion"));
  EXPECT_FALSE(Lexicon::is_within("lugar", "lugar.construccion"));
  EXPECT_EQ(lex.connotation("material.sustancia.excremento"), Polarity::unpleasant);
  EXPECT_EQ(lex.connotation("lugar.construccion.habitacion"), Polarity::neutral);
  const OntologyClass* habitacion = lex.ontology_class("lugar.construccion.habitacion");
  ASSERT_NE(habitacion, nullptr);
  EXPECT_EQ(habitacion->depth, 3);
  EXPECT_EQ(habitacion->parent, "lugar.construccion");
}

TEST(Lexicon, NounsInDeclarationOrder) {
  std::vector<std::string> nouns = sample().nouns(Language::de);
  EXPECT_EQ(nouns, (std::vector<std::string>{"Frage", "Flucht", "Aufenthalt", "Schmerz"}));
}

TEST(Enums, WireNamesRoundTrip) {
  EXPECT_EQ(name_of(Gender::none), "n/a");
  EXPECT_EQ(parse_enum<DeterminerPolicy>("required-definite"), DeterminerPolicy::required_definite);
  EXPECT_EQ(name_of(ClauseFunction::prepositional_complement), "prepositional-complement");
  EXPECT_FALSE(parse_enum<Language>("it"));
  EXPECT_TRUE(allows(NumberPolicy::per_candidate, Number::plural));
  EXPECT_FALSE(allows(DeterminerPolicy::forbidden, Determiner::definite));
  EXPECT_FALSE(allows(HeadNumberPolicy::singular_only, Number::plural));
}
