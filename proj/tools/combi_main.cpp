// Command-line front end. Exit codes: 0 success, 1 domain failure (including
// a rejected phrase or a bundle with findings), 2 usage error.

#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "combi/embedding.hpp"
#include "combi/error.hpp"
#include "combi/export.hpp"
#include "combi/ontology.hpp"
#include "combi/service.hpp"
#include "combi/validator.hpp"

namespace {

using namespace combi;

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

Language language_arg(const std::string& text) {
  auto lang = parse_enum<Language>(text);
  if (!lang) throw CLI::ValidationError("--lang", "expected es, fr or de");
  return *lang;
}

ClassSelection selection_arg(const std::vector<std::string>& items) {
  ClassSelection out;
  for (const std::string& item : items) {
    ClassSelection one = parse_selection(item);
    out.insert(one.begin(), one.end());
  }
  return out;
}

std::string sense_or_first(const Lexicon& lex, Language lang, const std::string& noun, const std::string& sense) {
  if (!sense.empty()) return sense;
  std::vector<SenseSchema> senses = schemas_for(lex, lang, noun);
  for (const SenseSchema& s : senses) {
    if (!s.schema->slots.empty()) return s.sense_id;
  }
  return senses.front().sense_id;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Valency-lexicon noun phrase generator and validator"};
  app.require_subcommand(1);

  std::string bundle;
  std::string lang_text;
  std::string noun;
  std::string sense;
  std::string format = "text";

  auto common = [&](CLI::App* cmd, bool with_lang) {
    cmd->add_option("--bundle", bundle, "Lexicon bundle (JSON)")->required()->check(CLI::ExistingFile);
    if (with_lang) cmd->add_option("--lang", lang_text, "Language: es, fr or de")->required();
  };

  // serve
  CLI::App* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  std::string vectors_path;
  ServeOptions serve_options;
  common(serve_cmd, false);
  serve_cmd->add_option("--vectors", vectors_path, "Word vectors for the filter")->check(CLI::ExistingFile);
  serve_cmd->add_option("--port", serve_options.port, "Port");
  serve_cmd->add_option("--host", serve_options.host, "Bind address");
  serve_cmd->add_option("--cors-origin", serve_options.cors_origin, "Allowed CORS origin");

  // generate
  CLI::App* gen_cmd = app.add_subcommand("generate", "Generate phrases for a structure");
  std::vector<std::string> selects;
  std::string template_id;
  std::optional<std::uint64_t> seed;
  std::size_t limit = 20;
  bool filter = false;
  std::string frame_id;
  common(gen_cmd, true);
  gen_cmd->add_option("--noun", noun)->required();
  gen_cmd->add_option("--sense", sense)->required();
  gen_cmd->add_option("--select", selects, "slot=class, repeatable")->required();
  gen_cmd->add_option("--template", template_id, "Structure id (default: the first)");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--limit", limit)->check(CLI::Range(0, 10000));
  gen_cmd->add_flag("--filter", filter, "Rank with the word-vector filter");
  gen_cmd->add_option("--vectors", vectors_path)->check(CLI::ExistingFile);
  gen_cmd->add_option("--frame", frame_id, "Sentence frame id (sentence mode)");
  gen_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  // structures
  CLI::App* struct_cmd = app.add_subcommand("structures", "List structures for a class selection");
  common(struct_cmd, true);
  struct_cmd->add_option("--noun", noun)->required();
  struct_cmd->add_option("--sense", sense)->required();
  struct_cmd->add_option("--select", selects)->required();

  // validate
  CLI::App* val_cmd = app.add_subcommand("validate", "Check a phrase against the lexicon");
  std::string phrase;
  bool sentence = false;
  common(val_cmd, true);
  val_cmd->add_flag("--sentence", sentence, "Treat the input as a clause");
  val_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  val_cmd->add_option("phrase", phrase)->required();

  // lexicon check / expand
  CLI::App* lex_cmd = app.add_subcommand("lexicon", "Bundle maintenance");
  lex_cmd->require_subcommand(1);
  CLI::App* check_cmd = lex_cmd->add_subcommand("check", "Validate a bundle");
  common(check_cmd, false);
  CLI::App* expand_cmd = lex_cmd->add_subcommand("expand", "Propose new candidates from a lexical resource");
  std::string resource_path;
  int slot = 0;
  std::string class_id;
  common(expand_cmd, false);
  expand_cmd->add_option("--lang", lang_text)->default_val("es");
  expand_cmd->add_option("--resource", resource_path)->required()->check(CLI::ExistingFile);
  expand_cmd->add_option("--noun", noun)->required();
  expand_cmd->add_option("--sense", sense)->required();
  expand_cmd->add_option("--slot", slot)->required();
  expand_cmd->add_option("--class", class_id)->required();

  // rank
  CLI::App* rank_cmd = app.add_subcommand("rank", "Rank the prototypes of a slot");
  common(rank_cmd, true);
  rank_cmd->add_option("--noun", noun)->required();
  rank_cmd->add_option("--sense", sense);
  rank_cmd->add_option("--slot", slot)->required();

  // adjstats
  CLI::App* adj_cmd = app.add_subcommand("adjstats", "Role distribution of annotated adjectives");
  std::string position_text;
  common(adj_cmd, true);
  adj_cmd->add_option("--noun", noun)->required();
  adj_cmd->add_option("--sense", sense);
  adj_cmd->add_option("--position", position_text)->required()->check(CLI::IsMember({"pre", "post"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Lexicon lex = load_bundle_file(bundle);

    if (serve_cmd->parsed()) {
      std::unique_ptr<VectorSpace> vectors;
      if (!vectors_path.empty()) vectors = std::make_unique<VectorSpace>(VectorSpace::load_file(vectors_path));
      Api api(lex, vectors.get());
      std::cerr << "listening on " << serve_options.host << ":" << serve_options.port << "\n";
      if (!serve(api, serve_options)) {
        std::cerr << "cannot bind " << serve_options.host << ":" << serve_options.port << "\n";
        return kDomain;
      }
      return kOk;
    }

    if (check_cmd->parsed()) {
      ValidationReport report = validate_bundle(lex);
      for (const Finding& f : report.findings) std::cout << f.code << "\t" << f.subject << "\t" << f.message << "\n";
      if (report.clean()) std::cout << "ok\n";
      return report.clean() ? kOk : kDomain;
    }

    if (expand_cmd->parsed()) {
      FileLexicalResource resource = FileLexicalResource::from_file(resource_path);
      SlotRef ref{language_arg(lang_text), noun, sense, slot};
      for (const ExpansionCandidate& c : expand_candidates(lex, resource, ref, class_id)) {
        std::cout << c.lemma << "\t" << c.class_id << "\t" << (c.unreviewed ? "unreviewed" : "reviewed") << "\n";
      }
      return kOk;
    }

    Language lang = language_arg(lang_text);

    if (gen_cmd->parsed()) {
      GenerateRequest req;
      req.language = lang;
      req.noun = noun;
      req.sense_id = sense;
      req.selection = selection_arg(selects);
      req.template_id = template_id;
      req.limit = limit;
      req.use_filter = filter;
      req.frame_id = frame_id;
      req.seed = seed;
      if (!req.seed) {
        std::random_device rd;
        req.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        std::cerr << "seed " << *req.seed << "\n";
      }
      std::unique_ptr<VectorSpace> vectors;
      if (!vectors_path.empty()) vectors = std::make_unique<VectorSpace>(VectorSpace::load_file(vectors_path));
      GenerateResult result = run_generate(lex, vectors.get(), req);
      std::vector<GeneratedPhrase> rows = export_rows(result);
      if (format == "json") {
        std::cout << export_json(rows);
      } else if (format == "csv") {
        std::cout << export_csv(rows);
      } else {
        for (const GeneratedPhrase& p : rows) std::cout << p.surface << "\n";
      }
      return kOk;
    }

    if (struct_cmd->parsed()) {
      for (const StructureTemplate& t : enumerate_structures(lex, lang, noun, sense, selection_arg(selects))) {
        std::cout << t.id << "\t" << t.standard_example << "\n";
      }
      return kOk;
    }

    if (val_cmd->parsed()) {
      PhraseMatcher matcher(lex);
      Verdict v = sentence ? matcher.validate_sentence(lang, phrase) : matcher.validate(lang, phrase);
      if (format == "json") {
        std::cout << verdict_to_json(v).dump(2) << "\n";
      } else {
        std::cout << verdict_name(v.status);
        if (v.sense_id) std::cout << "\t" << *v.sense_id << "\t" << v.template_id.value_or("");
        std::cout << "\n";
        for (const Diagnosis& d : v.diagnoses) std::cout << d.rule << "\t" << d.message << "\n";
        for (const std::string& n : v.notes) std::cout << "note\t" << n << "\n";
      }
      return v.accepted() ? kOk : kDomain;
    }

    if (rank_cmd->parsed()) {
      SlotRef ref{lang, noun, sense_or_first(lex, lang, noun, sense), slot};
      for (const Prototype& p : rank_prototypes(lex, ref)) {
        std::cout << p.lemma << " " << p.count << "\n";
      }
      return kOk;
    }

    if (adj_cmd->parsed()) {
      AdjectivePosition position = position_text == "pre" ? AdjectivePosition::prenominal
                                                          : AdjectivePosition::postnominal;
      std::string s = sense;
      if (s.empty()) {
        for (const SenseSchema& ss : schemas_for(lex, lang, noun)) {
          if (lex.adjective_annotation(lang, noun, ss.sense_id, position)) {
            s = ss.sense_id;
            break;
          }
        }
      }
      RoleDistribution dist = classify_adjectives(lex, lang, noun, s, position);
      for (const RoleShare& share : dist.shares) {
        std::cout << share.label << " " << share.percent << "% (" << share.count << "/" << dist.total << ")\n";
      }
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << code_name(e.code()) << ": " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
