#include <gtest/gtest.h>

#include "json.hpp"

#include "combi/export.hpp"
#include "combi/service.hpp"
#include "support.hpp"

using namespace combi;
using combi::testing::data_path;
using combi::testing::sample;
using nlohmann::json;

namespace {

const VectorSpace& vectors() {
  static const VectorSpace vs = VectorSpace::load_file(data_path("sample_vectors.txt"));
  return vs;
}

const Api& api() {
  static const Api a(sample(), &vectors());
  return a;
}

HttpResponse get(const std::string& path, std::map<std::string, std::string> query = {}) {
  return api().handle({"GET", path, std::move(query), ""});
}

HttpResponse post(const std::string& path, const json& body, std::map<std::string, std::string> query = {}) {
  return api().handle({"POST", path, std::move(query), body.dump()});
}

const json kOlorRequest = {{"language", "es"},
                           {"noun", "olor"},
                           {"sense", "olfato"},
                           {"selection",
                            {{"1", "material.sustancia.liquido_no_consumible"},
                             {"2", "lugar.construccion.habitacion"}}},
                           {"seed", 42},
                           {"limit", 15}};

}  // namespace

TEST(Api, Languages) {
  HttpResponse r = get("/api/languages");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(json::parse(r.body), json({"es", "fr", "de"}));
}

TEST(Api, NounsAndSenses) {
  json nouns = json::parse(get("/api/es/nouns").body);
  ASSERT_TRUE(nouns.is_array());
  EXPECT_EQ(nouns.at(0).at("lemma"), "olor");
  json senses = json::parse(get("/api/de/nouns/Flucht/senses").body);
  ASSERT_EQ(senses.size(), 1u);
  EXPECT_EQ(senses.at(0).at("head_number"), "singular-only");
  EXPECT_EQ(senses.at(0).at("slots").at(1).at("requires"), json({3}));
  EXPECT_EQ(senses.at(0).at("slots").at(2).at("role_gloss"), "Locación: Dirección");
  EXPECT_EQ(get("/api/es/nouns/mesa/senses").status, 404);
  EXPECT_EQ(get("/api/it/nouns").status, 404);
}

TEST(Api, DrilldownLevels) {
  json roots = json::parse(get("/api/es/nouns/olor/senses/olfato/slots/2/classes").body);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots.at(0).at("id"), "lugar");
  json leaves = json::parse(
      get("/api/es/nouns/olor/senses/olfato/slots/2/classes", {{"parent", "lugar.construccion"}}).body);
  ASSERT_EQ(leaves.size(), 1u);
  EXPECT_EQ(leaves.at(0).at("example"), "habitación");
  EXPECT_EQ(leaves.at(0).at("members"), 16);
  EXPECT_TRUE(leaves.at(0).at("leaf").get<bool>());
  EXPECT_EQ(get("/api/es/nouns/olor/senses/olfato/slots/x/classes").status, 404);
}

TEST(Api, Structures) {
  HttpResponse r = get("/api/es/nouns/olor/senses/olfato/structures",
                       {{"selection", "1:material.sustancia.liquido_no_consumible,2:lugar.construccion.habitacion"}});
  ASSERT_EQ(r.status, 200);
  json s = json::parse(r.body);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s.at(0).at("id"), "sg/1:0,2:0");
  EXPECT_EQ(s.at(0).at("slots").at(0).at("preposition"), "a");
  HttpResponse dep = get("/api/de/nouns/Flucht/senses/entkommen/structures", {{"selection", "2:lugar.poblacion.ciudad"}});
  EXPECT_EQ(dep.status, 422);
  EXPECT_EQ(json::parse(dep.body).at("error").at("code"), "dependency-error");
}

TEST(Api, FramesByPosition) {
  json before = json::parse(get("/api/es/nouns/respuesta/frames", {{"position", "before-np"}}).body);
  json after = json::parse(get("/api/es/nouns/respuesta/frames", {{"position", "after-np"}}).body);
  EXPECT_EQ(before.size(), 4u);
  EXPECT_EQ(after.size(), 4u);
  EXPECT_EQ(after.at(0).at("pattern").at(0), "NP");
  EXPECT_EQ(get("/api/es/nouns/respuesta/frames", {{"position", "sideways"}}).status, 422);
}

TEST(Api, GenerateIsSeeded) {
  HttpResponse a = post("/api/generate", kOlorRequest);
  HttpResponse b = post("/api/generate", kOlorRequest);
  ASSERT_EQ(a.status, 200) << a.body;
  EXPECT_EQ(a.body, b.body);
  json j = json::parse(a.body);
  EXPECT_EQ(j.at("meta").at("seed"), 42);
  EXPECT_EQ(j.at("meta").at("count"), 15);
  EXPECT_EQ(j.at("meta").at("template"), "sg/1:0,2:0");
  EXPECT_EQ(j.at("phrases").size(), 15u);
}

TEST(Api, GenerateWithoutSeedReportsOne) {
  json req = kOlorRequest;
  req.erase("seed");
  json j = json::parse(post("/api/generate", req).body);
  EXPECT_TRUE(j.at("meta").at("seed").is_number_unsigned());
}

TEST(Api, GenerateSentences) {
  json req = kOlorRequest;
  req["frame"] = "es-olor-3";
  req["limit"] = 5;
  json j = json::parse(post("/api/generate", req).body);
  ASSERT_TRUE(j.contains("sentences"));
  for (const json& s : j.at("sentences")) {
    EXPECT_EQ(s.at("frame"), "es-olor-3");
    EXPECT_TRUE(validate_sentence(sample(), Language::es, s.at("text").get<std::string>()).accepted());
  }
}

TEST(Api, GenerateErrors) {
  json bad_limit = kOlorRequest;
  bad_limit["limit"] = 10001;
  EXPECT_EQ(post("/api/generate", bad_limit).status, 422);
  json no_noun = kOlorRequest;
  no_noun.erase("noun");
  EXPECT_EQ(post("/api/generate", no_noun).status, 400);
  EXPECT_EQ(api().handle({"POST", "/api/generate", {}, "{not json"}).status, 400);
  json unknown = kOlorRequest;
  unknown["noun"] = "mesa";
  EXPECT_EQ(post("/api/generate", unknown).status, 404);
}

TEST(Api, ExportMatchesGenerate) {
  GenerateRequest req = parse_generate_request(kOlorRequest);
  GenerateResult result = run_generate(sample(), &vectors(), req);
  HttpResponse j = post("/api/export", kOlorRequest, {{"format", "json"}});
  EXPECT_EQ(j.body, export_json(export_rows(result)));
  EXPECT_EQ(j.headers.at("Content-Disposition"), "attachment; filename=\"phrases.json\"");
  HttpResponse c = post("/api/export", kOlorRequest, {{"format", "csv"}});
  EXPECT_EQ(c.body, export_csv(export_rows(result)));
  EXPECT_EQ(c.content_type.rfind("text/csv", 0), 0u);
  EXPECT_EQ(post("/api/export", kOlorRequest, {{"format", "xml"}}).status, 422);
}

TEST(Api, Validate) {
  json ok = json::parse(post("/api/validate", {{"language", "es"}, {"text", "la muerte del niño"}}).body);
  EXPECT_EQ(ok.at("status"), "accepted");
  json bad = json::parse(post("/api/validate", {{"language", "de"}, {"text", "Der Aufenthalt von November"}}).body);
  EXPECT_EQ(bad.at("status"), "rejected");
  json sentence = json::parse(post("/api/validate", {{"language", "es"},
                                                     {"text", "El agradable olor a excrementos es intenso"},
                                                     {"mode", "sentence"}})
                                  .body);
  EXPECT_EQ(sentence.at("status"), "rejected");
}

TEST(Api, UnknownRoutes) {
  EXPECT_EQ(get("/nothing").status, 404);
  EXPECT_EQ(get("/api/es/nouns/olor/whatever").status, 404);
  EXPECT_EQ(api().handle({"DELETE", "/api/languages", {}, ""}).status, 404);
}

TEST(Api, FilterNeedsVectors) {
  Api bare(sample(), nullptr);
  json req = kOlorRequest;
  req["filter"] = true;
  HttpResponse r = bare.handle({"POST", "/api/generate", {}, req.dump()});
  EXPECT_EQ(r.status, 500);
  EXPECT_EQ(json::parse(r.body).at("error").at("code"), "resource-error");
  EXPECT_EQ(post("/api/generate", req).status, 200);
}
