#include <gtest/gtest.h>

#include <cmath>

#include "combi/embedding.hpp"
#include "combi/error.hpp"
#include "support.hpp"

using namespace combi;
using combi::testing::data_path;
using combi::testing::sample;

namespace {

GeneratedPhrase phrase(std::string surface, std::vector<std::string> lemmas) {
  GeneratedPhrase p;
  p.surface = std::move(surface);
  int slot = 1;
  for (std::string& l : lemmas) {
    TraceItem item;
    item.slot = slot++;
    item.lemma = std::move(l);
    p.trace.push_back(std::move(item));
  }
  return p;
}

}  // namespace

TEST(Cosine, UnitValues) {
  EXPECT_NEAR(cosine({0.3, -1.2, 4.0}, {0.3, -1.2, 4.0}), 1.0, 1e-6);
  EXPECT_NEAR(cosine({1, 0, 0}, {0, 5, 0}), 0.0, 1e-6);
  EXPECT_NEAR(cosine({1, 0}, {1, 1}), 0.7071, 1e-4);
  EXPECT_NEAR(cosine({1, 2}, {-1, -2}), -1.0, 1e-6);
  EXPECT_EQ(cosine({0, 0}, {1, 1}), 0.0);
}

TEST(VectorSpace, LoadsTextFormat) {
  VectorSpace vs = VectorSpace::load_string("3 2\nagua 1 0\nagua_salada 0 1\nolor 1 1\n");
  EXPECT_EQ(vs.size(), 3u);
  EXPECT_EQ(vs.dimension(), 2u);
  ASSERT_NE(vs.find("agua salada"), nullptr);
  EXPECT_EQ((*vs.find("agua salada"))[1], 1.0);
  EXPECT_EQ(vs.find("vino"), nullptr);
}

TEST(VectorSpace, HeaderIsOptional) {
  VectorSpace vs = VectorSpace::load_string("a 1 2 3\nb 4 5 6\n");
  EXPECT_EQ(vs.dimension(), 3u);
  EXPECT_EQ(vs.size(), 2u);
}

TEST(VectorSpace, NormalizesOnRequest) {
  VectorSpace vs = VectorSpace::load_string("a 3 4\n", true);
  EXPECT_TRUE(vs.normalized());
  EXPECT_NEAR((*vs.find("a"))[0], 0.6, 1e-12);
}

TEST(VectorSpace, DimensionMismatchNamesTheLine) {
  try {
    VectorSpace::load_string("a 1 2\nb 1 2 3\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(e.location().find('2'), std::string::npos) << e.location();
  }
  VectorSpace vs(2);
  EXPECT_THROW(vs.add("x", {1, 2, 3}), DomainError);
}

TEST(VectorSpace, SampleFileCoversTheLexicon) {
  VectorSpace vs = VectorSpace::load_file(data_path("sample_vectors.txt"));
  EXPECT_EQ(vs.dimension(), 24u);
  EXPECT_NE(vs.find("olor"), nullptr);
  EXPECT_NE(vs.find("agua salada"), nullptr);
  EXPECT_NE(vs.find("nourrisson"), nullptr);
}

TEST(ContextScore, MeanOfKnownContext) {
  VectorSpace vs = VectorSpace::load_string("a 1 0\nb 0 1\nc 1 1\n");
  EXPECT_NEAR(*context_score(vs, "c", {"a", "b"}), 1.0, 1e-12);
  EXPECT_NEAR(*context_score(vs, "a", {"b", "zzz"}), 0.0, 1e-12);
  EXPECT_FALSE(context_score(vs, "zzz", {"a"}));
  EXPECT_FALSE(context_score(vs, "a", {"zzz"}));
  EXPECT_THROW(context_score(vs, "a", {}), DomainError);
}

TEST(Filter, RanksLastSlotAgainstContext) {
  VectorSpace vs = VectorSpace::load_string("head 1 0\nx 1 0\nnear 1 0.1\nfar 0 1\nmid 1 1\n");
  std::vector<GeneratedPhrase> in = {phrase("p-far", {"x", "far"}), phrase("p-near", {"x", "near"}),
                                     phrase("p-mid", {"x", "mid"}), phrase("p-oov", {"x", "unknown"})};
  auto out = filter_phrases(vs, "head", in, 10);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].phrase.surface, "p-near");
  EXPECT_EQ(out[1].phrase.surface, "p-mid");
  EXPECT_EQ(out[2].phrase.surface, "p-far");
  EXPECT_EQ(filter_phrases(vs, "head", in, 2).size(), 2u);
}

TEST(Filter, TiesBreakBySurface) {
  VectorSpace vs = VectorSpace::load_string("h 1 0\na 1 0\nb 1 0\n");
  auto out = filter_phrases(vs, "h", {phrase("zeta", {"a"}), phrase("alfa", {"b"})}, 5);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].score, out[1].score);
  EXPECT_EQ(out[0].phrase.surface, "alfa");
}

TEST(Filter, GeneratorUsesTheFilter) {
  const Lexicon& lex = sample();
  VectorSpace vs = VectorSpace::load_file(data_path("sample_vectors.txt"));
  StructureTemplate t = find_structure(lex, Language::fr, "mort", "deces",
                                       {{1, "animado.humano.familia"}, {2, "proceso.natural.patologico"}},
                                       "sg/1:0,2:0");
  auto filtered = generate_phrases(lex, t, {8, 12, &vs});
  ASSERT_EQ(filtered.size(), 12u);
  for (std::size_t i = 0; i < filtered.size(); ++i) {
    ASSERT_TRUE(filtered[i].score);
    if (i) EXPECT_GE(*filtered[i - 1].score, *filtered[i].score);
  }
  EXPECT_EQ(generate_phrases(lex, t, {8, 12, &vs}), filtered);
}
