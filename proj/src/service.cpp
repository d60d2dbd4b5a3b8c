#include "combi/service.hpp"

#include <random>

#include "httplib.h"

#include "combi/error.hpp"
#include "combi/export.hpp"
#include "combi/ontology.hpp"

namespace combi {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t slash = path.find('/', start);
    if (slash == std::string::npos) slash = path.size();
    if (slash > start) parts.push_back(path.substr(start, slash - start));
    start = slash + 1;
  }
  return parts;
}

Language language_or_404(const std::string& text) {
  auto lang = parse_enum<Language>(text);
  if (!lang) throw NotFoundError("unknown language \"" + text + "\"");
  return *lang;
}

int status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse:
      return 400;
    case ErrorCode::not_found:
      return 404;
    case ErrorCode::domain:
    case ErrorCode::dependency:
    case ErrorCode::empty_paradigm:
    case ErrorCode::frame_incomplete:
      return 422;
    default:
      return 500;
  }
}

HttpResponse json_response(const ordered_json& body, int status = 200) {
  HttpResponse r;
  r.status = status;
  r.body = body.dump() + "\n";
  return r;
}

HttpResponse error_response(int status, std::string_view code, const std::string& message) {
  ordered_json body;
  body["error"] = {{"code", code}, {"message", message}};
  return json_response(body, status);
}

std::string gloss_in(const std::map<Language, std::string>& gloss, Language language) {
  if (auto it = gloss.find(language); it != gloss.end()) return it->second;
  if (auto it = gloss.find(Language::es); it != gloss.end()) return it->second;
  return {};
}

ordered_json structure_to_json(const Lexicon& lex, const StructureTemplate& t) {
  const ArgumentSchema& schema = require_schema(lex, t.language, t.noun, t.sense_id);
  ordered_json slots = ordered_json::array();
  for (const SlotChoice& c : t.slots) {
    const FormalRealization& r = schema.slot(c.slot)->realizations[c.realization];
    ordered_json s;
    s["slot"] = c.slot;
    s["role"] = c.role;
    s["class"] = c.class_id;
    s["realization"] = c.realization;
    s["kind"] = name_of(r.kind);
    if (!r.preposition.empty()) s["preposition"] = r.preposition;
    slots.push_back(std::move(s));
  }
  ordered_json j;
  j["id"] = t.id;
  j["head_number"] = name_of(t.head_number);
  j["slots"] = std::move(slots);
  j["standard_example"] = t.standard_example;
  return j;
}

std::string string_field(const json& body, const char* key, bool required = true) {
  if (!body.contains(key)) {
    if (required) throw ParseError(std::string("/") + key, "missing field");
    return {};
  }
  if (!body.at(key).is_string()) throw ParseError(std::string("/") + key, "expected a string");
  return body.at(key).get<std::string>();
}

}  // namespace

GenerateRequest parse_generate_request(const json& body) {
  if (!body.is_object()) throw ParseError("/", "expected a JSON object");
  GenerateRequest req;
  std::string lang = string_field(body, "language");
  auto parsed = parse_enum<Language>(lang);
  if (!parsed) throw NotFoundError("unknown language \"" + lang + "\"");
  req.language = *parsed;
  req.noun = string_field(body, "noun");
  req.sense_id = string_field(body, "sense");
  req.template_id = string_field(body, "template", false);
  req.frame_id = string_field(body, "frame", false);

  if (!body.contains("selection")) throw ParseError("/selection", "missing field");
  const json& sel = body.at("selection");
  if (sel.is_string()) {
    req.selection = parse_selection(sel.get<std::string>());
  } else if (sel.is_object()) {
    for (const auto& [key, value] : sel.items()) {
      if (!value.is_string()) throw ParseError("/selection/" + key, "expected a class id");
      ClassSelection one = parse_selection(key + ":" + value.get<std::string>());
      req.selection.insert(one.begin(), one.end());
    }
  } else {
    throw ParseError("/selection", "expected an object or \"slot:class,...\"");
  }

  if (body.contains("seed") && !body.at("seed").is_null()) {
    const json& seed = body.at("seed");
    if (!seed.is_number_integer() || (!seed.is_number_unsigned() && seed.get<long long>() < 0)) {
      throw ParseError("/seed", "expected a non-negative integer");
    }
    req.seed = body.at("seed").get<std::uint64_t>();
  }
  if (body.contains("limit")) {
    const json& limit = body.at("limit");
    if (!limit.is_number_integer()) throw ParseError("/limit", "expected an integer");
    long long n = limit.get<long long>();
    if (n < 0 || n > static_cast<long long>(GenerateRequest::kMaxLimit)) {
      throw DomainError("limit must lie in [0, 10000]");
    }
    req.limit = static_cast<std::size_t>(n);
  }
  if (body.contains("filter")) {
    if (!body.at("filter").is_boolean()) throw ParseError("/filter", "expected a boolean");
    req.use_filter = body.at("filter").get<bool>();
  }
  return req;
}

GenerateResult run_generate(const Lexicon& lex, const VectorSpace* vectors, const GenerateRequest& req) {
  if (req.limit > GenerateRequest::kMaxLimit) throw DomainError("limit must lie in [0, 10000]");
  if (req.use_filter && !vectors) throw ResourceError("no vector file loaded; the filter is unavailable");
  GenerateResult out;
  out.seed = req.seed.value_or(0);

  if (req.template_id.empty()) {
    std::vector<StructureTemplate> all =
        enumerate_structures(lex, req.language, req.noun, req.sense_id, req.selection);
    if (all.empty()) throw NotFoundError("the selection yields no structure");
    out.structure = std::move(all.front());
  } else {
    out.structure = find_structure(lex, req.language, req.noun, req.sense_id, req.selection, req.template_id);
  }

  if (!req.frame_id.empty()) {
    const SentenceFrame* frame = lex.frame(req.frame_id);
    if (!frame) throw NotFoundError("unknown frame \"" + req.frame_id + "\"");
    out.sentences = generate_sentences(lex, *frame, out.structure, {out.seed, req.limit});
    for (const Sentence& s : out.sentences) out.phrases.push_back(s.np);
    return out;
  }

  GenerateOptions options;
  options.seed = out.seed;
  options.limit = req.limit;
  options.filter = req.use_filter ? vectors : nullptr;
  out.phrases = generate_phrases(lex, out.structure, options);
  return out;
}

std::vector<GeneratedPhrase> export_rows(const GenerateResult& result) {
  if (result.sentences.empty()) return result.phrases;
  std::vector<GeneratedPhrase> rows;
  for (const Sentence& s : result.sentences) {
    GeneratedPhrase row = s.np;
    row.surface = s.text;
    rows.push_back(std::move(row));
  }
  return rows;
}

Api::Api(const Lexicon& lex, const VectorSpace* vectors) : lex_(lex), vectors_(vectors), matcher_(lex) {}

std::uint64_t Api::fresh_seed() const {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

HttpResponse Api::handle(const HttpRequest& request) const {
  try {
    std::vector<std::string> p = split_path(request.path);
    auto query = [&](const std::string& key) -> std::string {
      auto it = request.query.find(key);
      return it == request.query.end() ? std::string() : it->second;
    };
    if (p.empty() || p[0] != "api") return error_response(404, "not-found", "no route " + request.path);

    if (request.method == "GET") {
      if (p.size() == 2 && p[1] == "languages") {
        ordered_json langs = ordered_json::array();
        for (Language l : lex_.meta().languages) langs.push_back(name_of(l));
        return json_response(langs);
      }
      if (p.size() >= 3 && p[2] == "nouns") {
        Language lang = language_or_404(p[1]);
        if (p.size() == 3) {
          ordered_json nouns = ordered_json::array();
          for (const std::string& noun : lex_.nouns(lang)) {
            ordered_json senses = ordered_json::array();
            for (const SenseSchema& s : schemas_for(lex_, lang, noun)) senses.push_back(s.sense_id);
            nouns.push_back({{"lemma", noun}, {"senses", senses}});
          }
          return json_response(nouns);
        }
        const std::string& noun = p[3];
        if (p.size() == 5 && p[4] == "senses") {
          ordered_json senses = ordered_json::array();
          for (const SenseSchema& s : schemas_for(lex_, lang, noun)) {
            ordered_json slots = ordered_json::array();
            for (const ArgumentSlot& slot : s.schema->slots) {
              const SemanticRole* role = lex_.role(slot.role);
              ordered_json realizations = ordered_json::array();
              for (const FormalRealization& r : slot.realizations) {
                ordered_json rj{{"kind", name_of(r.kind)}};
                if (!r.preposition.empty()) rj["preposition"] = r.preposition;
                rj["determiner"] = name_of(r.determiner_policy);
                rj["number"] = name_of(r.filler_number_policy);
                realizations.push_back(std::move(rj));
              }
              slots.push_back({{"index", slot.index},
                               {"role", slot.role},
                               {"role_gloss", role ? gloss_in(role->gloss, lang) : slot.role},
                               {"classes", slot.allowed_classes},
                               {"requires", slot.requires_slots},
                               {"realizations", std::move(realizations)}});
            }
            senses.push_back({{"id", s.sense_id},
                              {"gloss", s.schema->sense_gloss},
                              {"head_number", name_of(s.schema->head_number_policy)},
                              {"slots", std::move(slots)}});
          }
          return json_response(senses);
        }
        if (p.size() == 5 && p[4] == "frames") {
          std::optional<VerbPosition> position;
          if (std::string pos = query("position"); !pos.empty()) {
            position = parse_enum<VerbPosition>(pos);
            if (!position) throw DomainError("position must be before-np or after-np");
          }
          schemas_for(lex_, lang, noun);
          ordered_json frames = ordered_json::array();
          for (const SentenceFrame* f : list_frames(lex_, lang, noun, query("sense"), position)) {
            ordered_json pattern = ordered_json::array();
            for (const ClausePart& part : f->pattern) {
              pattern.push_back(part.np_host ? std::string("NP") : std::string(name_of(part.function)));
            }
            frames.push_back({{"id", f->id},
                              {"sense", f->sense_id},
                              {"position", name_of(f->verb_position)},
                              {"pattern", std::move(pattern)},
                              {"standard_example", f->standard_example}});
          }
          return json_response(frames);
        }
        if (p.size() >= 6 && p[4] == "senses") {
          const std::string& sense = p[5];
          require_schema(lex_, lang, noun, sense);
          if (p.size() == 7 && p[6] == "structures") {
            ClassSelection selection = parse_selection(query("selection"));
            ordered_json out = ordered_json::array();
            for (const StructureTemplate& t : enumerate_structures(lex_, lang, noun, sense, selection)) {
              out.push_back(structure_to_json(lex_, t));
            }
            return json_response(out);
          }
          if (p.size() == 9 && p[6] == "slots" && p[8] == "classes") {
            int slot = 0;
            try {
              slot = std::stoi(p[7]);
            } catch (const std::exception&) {
              throw NotFoundError("no slot \"" + p[7] + "\"");
            }
            std::string parent = query("parent");
            SlotRef ref{lang, noun, sense, slot};
            std::vector<ClassChoice> choices =
                parent.empty() ? drilldown(lex_, ref) : drilldown(lex_, ref, std::string_view(parent));
            ordered_json out = ordered_json::array();
            for (const ClassChoice& c : choices) {
              out.push_back({{"id", c.cls->id},
                             {"gloss", gloss_in(c.cls->gloss, lang)},
                             {"example", c.example},
                             {"members", c.member_count},
                             {"leaf", lex_.children(c.cls->id).empty()}});
            }
            return json_response(out);
          }
        }
      }
      return error_response(404, "not-found", "no route " + request.path);
    }

    if (request.method == "POST" && p.size() == 2) {
      json body;
      try {
        body = json::parse(request.body);
      } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), "malformed JSON body");
      }

      if (p[1] == "validate") {
        Language lang = language_or_404(string_field(body, "language"));
        std::string text = string_field(body, "text");
        bool sentence = string_field(body, "mode", false) == "sentence";
        Verdict v = sentence ? matcher_.validate_sentence(lang, text) : matcher_.validate(lang, text);
        return json_response(verdict_to_json(v));
      }

      if (p[1] == "generate" || p[1] == "export") {
        GenerateRequest req = parse_generate_request(body);
        if (!req.seed) req.seed = fresh_seed();
        GenerateResult result = run_generate(lex_, vectors_, req);

        if (p[1] == "export") {
          std::string format = query("format");
          if (format.empty()) format = "json";
          HttpResponse r;
          if (format == "json") {
            r.body = export_json(export_rows(result));
            r.headers["Content-Disposition"] = "attachment; filename=\"phrases.json\"";
          } else if (format == "csv") {
            r.content_type = "text/csv; charset=utf-8";
            r.body = export_csv(export_rows(result));
            r.headers["Content-Disposition"] = "attachment; filename=\"phrases.csv\"";
          } else {
            throw DomainError("format must be json or csv");
          }
          return r;
        }

        ordered_json out;
        if (!req.frame_id.empty()) {
          ordered_json sentences = ordered_json::array();
          for (const Sentence& s : result.sentences) {
            sentences.push_back({{"text", s.text},
                                 {"np", s.np_surface},
                                 {"frame", s.frame_id},
                                 {"trace", trace_to_json(s.np.trace)}});
          }
          out["sentences"] = std::move(sentences);
        } else {
          ordered_json phrases = ordered_json::array();
          for (const GeneratedPhrase& ph : result.phrases) phrases.push_back(phrase_to_json(ph));
          out["phrases"] = std::move(phrases);
        }
        std::size_t count = req.frame_id.empty() ? result.phrases.size() : result.sentences.size();
        out["meta"] = {{"seed", result.seed}, {"count", count}, {"template", result.structure.id}};
        return json_response(out);
      }
    }
    return error_response(404, "not-found", "no route " + request.method + " " + request.path);
  } catch (const Error& e) {
    return error_response(status_of(e.code()), code_name(e.code()), e.what());
  } catch (const json::exception& e) {
    return error_response(400, "parse-error", e.what());
  }
}

bool serve(const Api& api, const ServeOptions& options) {
  httplib::Server server;
  auto adapt = [&api, &options](const httplib::Request& req, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", options.cors_origin);
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    if (req.method == "OPTIONS") {
      res.status = 204;
      return;
    }
    HttpRequest request{req.method, req.path, {}, req.body};
    for (const auto& [key, value] : req.params) request.query[key] = value;
    HttpResponse response = api.handle(request);
    res.status = response.status;
    for (const auto& [key, value] : response.headers) res.set_header(key, value);
    res.set_content(response.body, response.content_type);
  };
  server.Get(".*", adapt);
  server.Post(".*", adapt);
  server.Options(".*", adapt);
  return server.listen(options.host, options.port);
}

}  // namespace combi
