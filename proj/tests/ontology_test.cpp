#include <gtest/gtest.h>

#include <algorithm>

#include "combi/error.hpp"
#include "combi/ontology.hpp"
#include "support.hpp"

using namespace combi;
using combi::testing::data_path;
using combi::testing::sample;

namespace {

const SlotRef kOlorPlace{Language::es, "olor", "olfato", 2};
const SlotRef kOlorSource{Language::es, "olor", "olfato", 1};
const SlotRef kDolorSite{Language::es, "dolor", "sensacion_fisica", 3};

std::vector<std::string> ids(const std::vector<ClassChoice>& choices) {
  std::vector<std::string> out;
  for (const ClassChoice& c : choices) out.push_back(c.cls->id);
  return out;
}

}  // namespace

TEST(Drilldown, WalksFromRootToLeaf) {
  const Lexicon& lex = sample();
  auto roots = drilldown(lex, kOlorPlace);
  EXPECT_EQ(ids(roots), std::vector<std::string>{"lugar"});
  auto second = drilldown(lex, kOlorPlace, "lugar");
  EXPECT_EQ(ids(second), (std::vector<std::string>{"lugar.construccion", "lugar.residencia"}));
  auto leaves = drilldown(lex, kOlorPlace, "lugar.construccion");
  ASSERT_EQ(ids(leaves), std::vector<std::string>{"lugar.construccion.habitacion"});
  EXPECT_EQ(leaves[0].member_count, 16u);
  EXPECT_EQ(leaves[0].example, "habitación");
}

TEST(Drilldown, SourceSlotOffersLiquids) {
  auto level = drilldown(sample(), kOlorSource, "material.sustancia");
  auto it = std::find_if(level.begin(), level.end(), [](const ClassChoice& c) {
    return c.cls->id == "material.sustancia.liquido_no_consumible";
  });
  ASSERT_NE(it, level.end());
  EXPECT_EQ(it->example, "aguarrás");
  EXPECT_EQ(it->member_count, 12u);
}

TEST(Drilldown, UnknownParentOrSlot) {
  EXPECT_THROW(drilldown(sample(), kOlorPlace, "lugar.nada"), NotFoundError);
  EXPECT_THROW(drilldown(sample(), {Language::es, "olor", "olfato", 7}), NotFoundError);
}

TEST(Members, ListsWithoutDuplicatesAndRejectsForeignClasses) {
  const Lexicon& lex = sample();
  auto rooms = members(lex, kOlorPlace, "lugar.construccion.habitacion");
  EXPECT_EQ(rooms.size(), 16u);
  auto all = members(lex, kOlorPlace, "lugar");
  EXPECT_EQ(all.size(), 19u);
  EXPECT_THROW(members(lex, kOlorPlace, "material.sustancia.excremento"), DomainError);
  EXPECT_THROW(members(lex, kOlorPlace, "no.such"), DomainError);
}

TEST(Prototypes, RankedByCountThenLemma) {
  auto ranked = rank_prototypes(sample(), kDolorSite);
  ASSERT_EQ(ranked.size(), 16u);
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    EXPECT_EQ(ranked[i].rank, static_cast<int>(i) + 1);
    if (i) EXPECT_GE(ranked[i - 1].count, ranked[i].count);
  }
  EXPECT_EQ(ranked.front().lemma, "cabeza");
  EXPECT_EQ(ranked.front().count, 147678u);
  EXPECT_THROW(rank_prototypes(sample(), kOlorPlace), NotFoundError);
}

TEST(Expansion, OffersResourceLemmasOutsideTheMembership) {
  const Lexicon& lex = sample();
  FileLexicalResource resource = FileLexicalResource::from_file(data_path("toy_resource.json"));
  auto found = expand_candidates(lex, resource, kDolorSite, "animado.humano.parte_del_cuerpo");
  std::vector<std::string> lemmas;
  for (const ExpansionCandidate& c : found) {
    lemmas.push_back(c.lemma);
    EXPECT_TRUE(c.unreviewed);
    EXPECT_TRUE(Lexicon::is_within(c.class_id, "animado.humano.parte_del_cuerpo"));
  }
  EXPECT_NE(std::find(lemmas.begin(), lemmas.end(), "hombro"), lemmas.end());
  EXPECT_NE(std::find(lemmas.begin(), lemmas.end(), "rodilla"), lemmas.end());
  EXPECT_EQ(std::find(lemmas.begin(), lemmas.end(), "cabeza"), lemmas.end());
  EXPECT_EQ(std::find(lemmas.begin(), lemmas.end(), "salud"), lemmas.end());
}

TEST(Expansion, MalformedResource) {
  EXPECT_THROW(FileLexicalResource::from_string("{"), ResourceError);
  EXPECT_THROW(FileLexicalResource::from_string("{}"), ResourceError);
  EXPECT_THROW(FileLexicalResource::from_string(R"([{"lemma":"x","language":"xx"}])"), ResourceError);
  EXPECT_THROW(FileLexicalResource::from_file("/nonexistent/resource.json"), ResourceError);
}

TEST(Expansion, SisterTermsCountAsSynonyms) {
  FileLexicalResource r = FileLexicalResource::from_string(R"([
    {"lemma":"a","language":"es","class":"c","hypernyms":["h"]},
    {"lemma":"b","language":"es","class":"c","hypernyms":["h"]},
    {"lemma":"d","language":"es","class":"c","synonyms":["a"]},
    {"lemma":"e","language":"fr","class":"c","hypernyms":["h"]}])");
  auto syn = r.synonyms_of("a", Language::es);
  ASSERT_EQ(syn.size(), 2u);
  EXPECT_EQ(syn[0].lemma, "b");
  EXPECT_EQ(syn[1].lemma, "d");
  EXPECT_EQ(r.hyponyms_of("h", Language::es).size(), 2u);
}

TEST(AdjectiveTally, HalfUpPercentages) {
  EXPECT_EQ(percent_half_up(1, 8), 13);
  EXPECT_EQ(percent_half_up(1, 3), 33);
  EXPECT_EQ(percent_half_up(2, 3), 67);
  EXPECT_EQ(percent_half_up(0, 0), 0);
  EXPECT_EQ(percent_half_up(5, 5), 100);
}

TEST(AdjectiveTally, DolorDistributions) {
  const Lexicon& lex = sample();
  RoleDistribution post =
      classify_adjectives(lex, Language::es, "dolor", "sensacion_fisica", AdjectivePosition::postnominal);
  EXPECT_EQ(post.total, 100u);
  EXPECT_EQ(post.percent("non-specific"), 47);
  EXPECT_EQ(post.percent("arg3"), 45);
  EXPECT_EQ(post.percent("arg2"), 7);
  EXPECT_EQ(post.percent("arg1"), 1);
  EXPECT_EQ(post.percent("arg9"), 0);
  RoleDistribution pre =
      classify_adjectives(lex, Language::es, "dolor", "sensacion_fisica", AdjectivePosition::prenominal);
  ASSERT_EQ(pre.shares.size(), 1u);
  EXPECT_EQ(pre.shares[0].label, "non-specific");
  EXPECT_EQ(pre.shares[0].percent, 100);
  EXPECT_THROW(classify_adjectives(lex, Language::es, "olor", "olfato", AdjectivePosition::prenominal),
               NotFoundError);
}
