#pragma once

// The query flow over HTTP. Api::handle is a pure function of the request, so
// tests drive it directly; serve() only adapts it to a socket.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "combi/embedding.hpp"
#include "combi/frames.hpp"
#include "combi/generator.hpp"
#include "combi/validator.hpp"

namespace combi {

struct GenerateRequest {
  Language language = Language::es;
  std::string noun;
  std::string sense_id;
  ClassSelection selection;
  std::string template_id;  // empty: the first template of the selection
  std::optional<std::uint64_t> seed;
  std::size_t limit = 20;
  bool use_filter = false;
  std::string frame_id;  // non-empty: sentence mode

  static constexpr std::size_t kMaxLimit = 10000;
};

// Reads the JSON body of POST /api/generate. ParseError for malformed fields,
// DomainError for a limit outside [0, 10000].
GenerateRequest parse_generate_request(const nlohmann::json& body);

struct GenerateResult {
  std::uint64_t seed = 0;
  StructureTemplate structure;
  std::vector<GeneratedPhrase> phrases;
  std::vector<Sentence> sentences;  // sentence mode only
};

// `seed` must be set. DependencyError/DomainError for invalid selections.
GenerateResult run_generate(const Lexicon& lex, const VectorSpace* vectors, const GenerateRequest& req);

// Rows for export: the phrases, or in sentence mode the sentences with the
// trace of their hosted NP.
std::vector<GeneratedPhrase> export_rows(const GenerateResult& result);

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::map<std::string, std::string> headers;
};

class Api {
 public:
  Api(const Lexicon& lex, const VectorSpace* vectors);

  HttpResponse handle(const HttpRequest& request) const;

  // Used when a generate request carries no seed.
  std::uint64_t fresh_seed() const;

 private:
  const Lexicon& lex_;
  const VectorSpace* vectors_;
  PhraseMatcher matcher_;
};

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string cors_origin = "*";
};

// Blocks until the server stops. Returns false when the port cannot be bound.
bool serve(const Api& api, const ServeOptions& options);

}  // namespace combi
