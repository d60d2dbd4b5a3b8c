// Acceptance run over the sample bundle: one PASS/FAIL line per criterion.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "combi/embedding.hpp"
#include "combi/export.hpp"
#include "combi/frames.hpp"
#include "combi/generator.hpp"
#include "combi/ontology.hpp"
#include "combi/service.hpp"
#include "combi/validator.hpp"
#include "support.hpp"

using namespace combi;
using combi::testing::all_templates;
using combi::testing::data_path;
using combi::testing::sample;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

bool contains(const std::vector<GeneratedPhrase>& phrases, const std::string& surface) {
  return std::any_of(phrases.begin(), phrases.end(), [&](const GeneratedPhrase& p) { return p.surface == surface; });
}

// 1 ------------------------------------------------------------------------

Outcome reachability() {
  const Lexicon& lex = sample();
  const std::vector<std::string> olor = {
      "el olor a aguarrás de las solanas",      "el olor a pesticida de las buhardillas",
      "el olor a espray del campanario",        "el olor a agua oxigenada de la sala de baile",
      "el olor a cicuta de los anfiteatros",    "el olor a alcohol de los zaguanes",
      "el olor a resina de los desvanes",       "el olor a aguarrás de los campanarios",
      "el olor a lejía de la habitación",       "el olor a agua salada de las salas de billar",
      "el olor a suavizante de los aseos",      "el olor a disolvente del trastero",
      "el olor a aguarrás de los urinarios",    "el olor a agua salada de los compartimentos",
      "el olor a resina de los vestíbulos"};
  const std::vector<std::string> mort = {
      "la mort du nourrisson par infection",
      "la mort du nouveau-né par complications infectieuses",
      "la mort du nourrisson par complications chirurgicales",
      "la mort du nouveau-né par éclampsie",
      "la mort du nouveau-né par complications cardiaques",
      "la mort de la nouveau-née par pneumonie",
      "la mort du nourrisson par sepsis",
      "la mort de la nouveau-née par complications chirurgicales",
      "la mort du nourrisson par tuberculose",
      "la mort du nourrisson par botulisme",
      "la mort du nouveau-né par complications chirurgicales",
      "la mort de la nouveau-née par complications infectieuses"};

  auto start = std::chrono::steady_clock::now();
  StructureTemplate t4 = find_structure(
      lex, Language::es, "olor", "olfato",
      {{1, "material.sustancia.liquido_no_consumible"}, {2, "lugar.construccion.habitacion"}}, "sg/1:0,2:0");
  StructureTemplate t5 = find_structure(
      lex, Language::fr, "mort", "deces",
      {{1, "animado.humano.familia"}, {2, "proceso.natural.patologico"}}, "sg/1:0,2:0");
  std::vector<GeneratedPhrase> all4 = enumerate_phrases(lex, t4);
  std::vector<GeneratedPhrase> all5 = enumerate_phrases(lex, t5);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int found = 0;
  std::string missing;
  for (const std::string& s : olor) contains(all4, s) ? ++found : (missing += " [" + s + "]", 0);
  for (const std::string& s : mort) contains(all5, s) ? ++found : (missing += " [" + s + "]", 0);
  std::ostringstream d;
  d << found << "/27 reachable, " << all4.size() + all5.size() << " enumerated in " << seconds << " s";
  if (!missing.empty()) return fail(d.str() + "; missing" + missing);
  if (seconds >= 5.0) return fail(d.str());
  return {true, d.str()};
}

// 2 ------------------------------------------------------------------------

struct Contrast {
  std::string label;
  Language language;
  std::string text;
  bool sentence;
  std::string rule;  // empty: must be accepted
};

Outcome contrast_suite() {
  const std::vector<Contrast> cases = {
      {"(4)", Language::es, "la muerte del niño", false, ""},
      {"(5)", Language::es, "las muertes de los niños", false, ""},
      {"(6)", Language::es, "las muertes del niño", false, "number-co-restriction"},
      {"(7)", Language::es, "la muerte del niño por intoxicación alimentaria", false, ""},
      {"(8)", Language::es, "las muertes de los niños por intoxicación alimentaria", false, ""},
      {"(9)", Language::es, "las muertes de los niños por intoxicaciones alimentarias", false, ""},
      {"(10)", Language::es, "la muerte del niño por intoxicaciones alimentarias", false, "number-co-restriction"},
      {"(13)", Language::es, "El dolor de cabeza de los enfermos", false, ""},
      {"(14)", Language::es, "el dolor de dientes de la enferma", false, ""},
      {"(16)", Language::de, "Die Frage der Arbeitslosigkeit", false, ""},
      {"(17)", Language::de, "Die Frage einer Arbeitslosigkeit", false, "determiner-policy"},
      {"(18)", Language::de, "Die Flucht von Madrid", false, "slot-interdependence"},
      {"(19)", Language::de, "Die Flucht von Madrid nach Santiago", false, ""},
      {"(20)", Language::de, "Der Aufenthalt von 3 Tagen", false, ""},
      {"(21)", Language::de, "Der Aufenthalt von November bis Dezember", false, ""},
      {"(22)", Language::de, "Der Aufenthalt von November", false, "paired-realization"},
      {"(23)", Language::es, "El agradable olor a excrementos es intenso", true, "class-connotation"},
      {"(24)", Language::es, "El agradable olor a excrementos resulta desagradable.", true, "polarity-clash"},
      {"(25)", Language::de, "die {lustige} Frage der Studentin", false, ""},
      {"(27)", Language::de, "die {unerwartete} Frage nach dem Ergebnis", false, ""},
  };
  PhraseMatcher matcher(sample());
  int exact = 0;
  std::string wrong;
  for (const Contrast& c : cases) {
    Verdict v = c.sentence ? matcher.validate_sentence(c.language, c.text) : matcher.validate(c.language, c.text);
    bool ok;
    if (c.rule.empty()) {
      ok = v.accepted();
    } else {
      ok = v.status == VerdictStatus::rejected &&
           std::any_of(v.diagnoses.begin(), v.diagnoses.end(), [&](const Diagnosis& d) { return d.rule == c.rule; });
    }
    if (ok) {
      ++exact;
    } else {
      wrong += " " + c.label;
    }
  }
  std::string d = std::to_string(exact) + "/" + std::to_string(cases.size()) + " exact";
  if (exact != static_cast<int>(cases.size())) return fail(d + "; wrong:" + wrong);
  return {true, d};
}

// 3 ------------------------------------------------------------------------

std::vector<StructureTemplate> restricted_templates(const Lexicon& lex) {
  return {
      find_structure(lex, Language::es, "olor", "olfato",
                     {{1, "material.sustancia.liquido_no_consumible"}, {2, "lugar.construccion.habitacion"}},
                     "sg/1:0,2:0"),
      find_structure(lex, Language::fr, "mort", "deces",
                     {{1, "animado.humano.familia"}, {2, "proceso.natural.patologico"}}, "pl/1:0,2:0"),
      enumerate_structures(lex, Language::es, "dolor", "sensacion_fisica",
                           {{1, "animado.humano.condicion_negativa"},
                            {2, "proceso.humano.medico"},
                            {3, "animado.humano.parte_del_cuerpo"}})
          .front(),
      enumerate_structures(lex, Language::de, "Frage", "erkundigung",
                           {{1, "animado.humano.profesion"}, {2, "intelectual.contenido_general"}})
          .front(),
      enumerate_structures(lex, Language::de, "Aufenthalt", "verweilen",
                           {{2, "lugar.poblacion.ciudad"}, {3, "tiempo.mes"}})
          .front(),
  };
}

Outcome restricted_randomness() {
  const Lexicon& lex = sample();
  std::size_t phrases = 0;
  std::size_t deviations = 0;
  std::size_t duplicates = 0;
  std::size_t unstable = 0;
  for (const StructureTemplate& t : restricted_templates(lex)) {
    const ArgumentSchema& schema = require_schema(lex, t.language, t.noun, t.sense_id);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      GenerateOptions opt;
      opt.seed = seed;
      opt.limit = 8;
      std::vector<GeneratedPhrase> batch = generate_phrases(lex, t, opt);
      std::set<std::string> surfaces;
      for (const GeneratedPhrase& p : batch) {
        ++phrases;
        if (!surfaces.insert(p.surface).second) ++duplicates;
        bool deviates = p.trace.size() != t.slots.size();
        for (std::size_t i = 0; !deviates && i < t.slots.size(); ++i) {
          const TraceItem& item = p.trace[i];
          const SlotChoice& want = t.slots[i];
          deviates = item.slot != want.slot || item.role != want.role ||
                     !Lexicon::is_within(item.class_id, want.class_id);
          if (!deviates) {
            auto pool = classed_members(lex, *schema.slot(want.slot), want.class_id);
            deviates = std::none_of(pool.begin(), pool.end(), [&](const ClassedCandidate& c) {
              return c.candidate.lemma == item.lemma && c.class_id == item.class_id;
            });
          }
        }
        if (deviates) ++deviations;
      }
      if (export_json(generate_phrases(lex, t, opt)) != export_json(batch)) ++unstable;
    }
  }
  std::ostringstream d;
  d << phrases << " phrases over 5 templates x 1000 seeds; deviations " << deviations << ", duplicates "
    << duplicates << ", unstable reruns " << unstable;
  if (deviations || duplicates || unstable || phrases < 5000) return fail(d.str());
  return {true, d.str()};
}

// 4 ------------------------------------------------------------------------

Outcome prototype_ranking() {
  std::vector<Prototype> ranked = rank_prototypes(sample(), {Language::es, "dolor", "sensacion_fisica", 3});
  const std::vector<std::tuple<std::string, int, std::uint64_t>> expected = {
      {"cabeza", 1, 147678}, {"espalda", 2, 29719}, {"cuello", 7, 3840}, {"ovario", 13, 1491}, {"hueso", 14, 1484}};
  std::string wrong;
  for (const auto& [lemma, rank, count] : expected) {
    auto it = std::find_if(ranked.begin(), ranked.end(), [&](const Prototype& p) { return p.lemma == lemma; });
    if (it == ranked.end() || it->rank != rank || it->count != count) wrong += " " + lemma;
  }
  if (!wrong.empty()) return fail("mismatch:" + wrong);
  return {true, "5/5 ranks and counts"};
}

// 5 ------------------------------------------------------------------------

Outcome adjective_tally() {
  const Lexicon& lex = sample();
  RoleDistribution post =
      classify_adjectives(lex, Language::es, "dolor", "sensacion_fisica", AdjectivePosition::postnominal);
  RoleDistribution pre =
      classify_adjectives(lex, Language::es, "dolor", "sensacion_fisica", AdjectivePosition::prenominal);
  std::ostringstream d;
  d << "postnominal " << post.percent("non-specific") << "/" << post.percent("arg3") << "/" << post.percent("arg2")
    << "/" << post.percent("arg1") << ", prenominal non-specific " << pre.percent("non-specific") << "%";
  bool ok = post.percent("non-specific") == 47 && post.percent("arg3") == 45 && post.percent("arg2") == 7 &&
            post.percent("arg1") == 1 && post.shares.size() == 4 && pre.percent("non-specific") == 100 &&
            pre.shares.size() == 1;
  return {ok, d.str()};
}

// 6 ------------------------------------------------------------------------

double oracle_cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

struct OracleRow {
  std::size_t input;
  std::string surface;
  double score;
};

// Scores every phrase from scratch and orders them by exhaustive pairwise
// selection: score descending, surface ascending, input order.
std::vector<OracleRow> oracle_filter(const std::map<std::string, std::vector<double>>& space, std::size_t dim,
                                     const std::string& head, const std::vector<GeneratedPhrase>& phrases,
                                     std::size_t limit) {
  auto lookup = [&](const std::string& w) -> const std::vector<double>* {
    auto it = space.find(w);
    return it == space.end() ? nullptr : &it->second;
  };
  std::vector<OracleRow> rows;
  for (std::size_t i = 0; i < phrases.size(); ++i) {
    const auto& trace = phrases[i].trace;
    if (trace.empty()) continue;
    std::vector<std::string> context{head};
    for (std::size_t j = 0; j + 1 < trace.size(); ++j) {
      context.push_back(trace[j].lemma);
      if (trace[j].paired) context.push_back(trace[j].paired->lemma);
    }
    if (trace.back().paired) context.push_back(trace.back().paired->lemma);
    const std::vector<double>* cand = lookup(trace.back().lemma);
    if (!cand) continue;
    std::vector<double> sum(dim, 0.0);
    std::size_t known = 0;
    for (const std::string& w : context) {
      if (const std::vector<double>* v = lookup(w)) {
        for (std::size_t k = 0; k < dim; ++k) sum[k] += (*v)[k];
        ++known;
      }
    }
    if (!known) continue;
    for (double& x : sum) x /= static_cast<double>(known);
    rows.push_back({i, phrases[i].surface, oracle_cosine(*cand, sum)});
  }
  std::vector<OracleRow> sorted;
  std::vector<bool> taken(rows.size(), false);
  while (sorted.size() < rows.size() && sorted.size() < limit) {
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (taken[i]) continue;
      if (best == rows.size()) {
        best = i;
        continue;
      }
      const OracleRow& a = rows[i];
      const OracleRow& b = rows[best];
      bool better = a.score > b.score || (a.score == b.score && a.surface < b.surface) ||
                    (a.score == b.score && a.surface == b.surface && a.input < b.input);
      if (better) best = i;
    }
    taken[best] = true;
    sorted.push_back(rows[best]);
  }
  return sorted;
}

Outcome filter_oracle() {
  bool units = std::abs(cosine({1, 2, 3}, {1, 2, 3}) - 1.0) < 1e-6 && std::abs(cosine({1, 0}, {0, 1})) < 1e-6 &&
               std::abs(cosine({1, 0}, {1, 1}) - 0.7071) < 1e-4;
  if (!units) return fail("cosine unit values off");

  std::mt19937_64 rng(424242);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int matched = 0;
  for (int instance = 0; instance < 100; ++instance) {
    std::size_t dim = static_cast<std::size_t>(uniform(2, 6));
    int words = uniform(3, 50);
    std::map<std::string, std::vector<double>> space;
    VectorSpace vs(dim);
    for (int w = 0; w < words; ++w) {
      std::vector<double> v(dim);
      // Small integer components make exact score ties common.
      for (double& x : v) x = uniform(-2, 2);
      space["w" + std::to_string(w)] = v;
      vs.add("w" + std::to_string(w), v);
    }
    // Vocabulary plus a few unknown words.
    auto word = [&]() { return "w" + std::to_string(uniform(0, words + 3)); };
    std::string head = word();
    std::vector<GeneratedPhrase> phrases(static_cast<std::size_t>(uniform(0, 200)));
    for (GeneratedPhrase& p : phrases) {
      int slots = uniform(0, 3);
      for (int s = 0; s < slots; ++s) {
        TraceItem item;
        item.slot = s + 1;
        item.lemma = word();
        if (uniform(0, 9) == 0) item.paired = PairedFiller{word(), Number::singular, Determiner::none};
        p.trace.push_back(item);
      }
      p.surface = "s" + std::to_string(uniform(0, 60));
    }
    std::size_t limit = static_cast<std::size_t>(uniform(0, 220));
    std::vector<ScoredPhrase> got = filter_phrases(vs, head, phrases, limit);
    std::vector<OracleRow> want = oracle_filter(space, dim, head, phrases, limit);
    bool same = got.size() == want.size();
    for (std::size_t i = 0; same && i < got.size(); ++i) {
      same = got[i].phrase == phrases[want[i].input] && got[i].score == want[i].score;
    }
    if (same) ++matched;
  }
  std::string d = std::to_string(matched) + "/100 instances equal the oracle; cosine units ok";
  return {matched == 100, d};
}

// 7 ------------------------------------------------------------------------

bool starts_with_vowel(const std::string& word) {
  static const std::vector<std::string> vowels = {"a", "e", "i", "o", "u", "y", "à", "â", "ä", "é", "è",
                                                  "ê", "ë", "î", "ï", "ô", "ö", "ù", "û", "ü", "œ"};
  for (const std::string& v : vowels) {
    if (word.compare(0, v.size(), v) == 0) return true;
  }
  return false;
}

std::vector<std::string> words_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string w; in >> w;) {
    std::string lower;
    for (char c : w) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    out.push_back(lower);
  }
  return out;
}

// Offending word pair or empty.
std::string contraction_fault(Language language, const std::string& text) {
  static const std::set<std::pair<std::string, std::string>> banned = {
      {"de", "el"}, {"de", "le"}, {"de", "les"}, {"à", "le"}, {"à", "les"}};
  std::vector<std::string> w = words_of(text);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (banned.count({w[i], w[i + 1]})) return w[i] + " " + w[i + 1];
    if (language == Language::fr && (w[i] == "de" || w[i] == "le" || w[i] == "la") && starts_with_vowel(w[i + 1])) {
      return w[i] + " " + w[i + 1];
    }
  }
  return {};
}

Outcome contraction_totality() {
  const Lexicon& lex = sample();
  std::vector<StructureTemplate> templates = all_templates(lex);
  std::size_t realized = 0;
  std::vector<std::string> faults;
  for (std::uint64_t round = 0; realized < 10000 && round < 200; ++round) {
    for (const StructureTemplate& t : templates) {
      GenerateOptions opt;
      opt.seed = round * 7919 + 1;
      opt.limit = 5;
      for (const GeneratedPhrase& p : generate_phrases(lex, t, opt)) {
        ++realized;
        std::string f = contraction_fault(t.language, p.surface);
        if (!f.empty()) faults.push_back(p.surface);
      }
      for (const SentenceFrame* frame : list_frames(lex, t.language, t.noun, t.sense_id)) {
        try {
          for (const Sentence& s : generate_sentences(lex, *frame, t, {round, 2})) {
            ++realized;
            if (!contraction_fault(t.language, s.text).empty()) faults.push_back(s.text);
          }
        } catch (const FrameIncompleteError&) {
        }
      }
    }
  }
  std::string d = std::to_string(realized) + " realizations over " + std::to_string(templates.size()) +
                  " templates, " + std::to_string(faults.size()) + " faults";
  if (!faults.empty()) return fail(d + "; first: " + faults.front());
  if (realized < 10000) return fail(d);
  return {true, d};
}

// 8 ------------------------------------------------------------------------

Outcome closure() {
  const Lexicon& lex = sample();
  PhraseMatcher matcher(lex);
  std::vector<StructureTemplate> templates = all_templates(lex);
  std::size_t nps = 0;
  std::size_t sentences = 0;
  std::vector<std::string> rejected;
  for (std::uint64_t round = 0; (nps < 1500 || sentences < 500) && round < 100; ++round) {
    for (const StructureTemplate& t : templates) {
      if (nps < 1500) {
        for (const GeneratedPhrase& p : generate_phrases(lex, t, {round, 3, nullptr})) {
          ++nps;
          if (!matcher.validate(t.language, p.surface).accepted()) rejected.push_back(p.surface);
        }
      }
      if (sentences >= 500) continue;
      for (const SentenceFrame* frame : list_frames(lex, t.language, t.noun, t.sense_id)) {
        try {
          for (const Sentence& s : generate_sentences(lex, *frame, t, {round, 1})) {
            ++sentences;
            if (!matcher.validate(t.language, s.np_surface).accepted()) rejected.push_back(s.np_surface);
            if (!matcher.validate_sentence(t.language, s.text).accepted()) rejected.push_back(s.text);
          }
        } catch (const FrameIncompleteError&) {
        }
      }
    }
  }
  std::size_t total = nps + sentences;
  std::string d = std::to_string(total - std::min(total, rejected.size())) + "/" + std::to_string(total) +
                  " accepted (" + std::to_string(nps) + " NPs, " + std::to_string(sentences) + " sentences)";
  if (!rejected.empty()) return fail(d + "; first rejected: " + rejected.front());
  if (total < 2000) return fail(d);
  return {true, d};
}

// 9 ------------------------------------------------------------------------

std::string run_command(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  pclose(pipe);
  return out;
}

Outcome export_round_trips() {
  const Lexicon& lex = sample();
  VectorSpace vectors = VectorSpace::load_file(data_path("sample_vectors.txt"));
  Api api(lex, &vectors);
  std::string detail;

  StructureTemplate t = find_structure(
      lex, Language::es, "olor", "olfato",
      {{1, "material.sustancia.liquido_no_consumible"}, {2, "lugar.construccion.habitacion"}}, "sg/1:0,2:0");
  std::vector<GeneratedPhrase> phrases = generate_phrases(lex, t, {11, 40, &vectors});
  for (GeneratedPhrase& p : phrases) p.seed = 0;
  std::string doc = export_json(phrases);
  if (import_json(doc) != phrases) return fail("JSON import differs from the exported phrases");
  std::string csv = export_csv(phrases);
  std::size_t lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
  if (lines != phrases.size() + 1) return fail("CSV has " + std::to_string(lines) + " lines");

  struct Case {
    std::string args;
    nlohmann::json body;
  };
  const std::string bundle = data_path("sample_bundle.json");
  const std::string vecs = data_path("sample_vectors.txt");
  const std::vector<Case> cases = {
      {"--lang es --noun olor --sense olfato --select 1=material.sustancia.liquido_no_consumible "
       "--select 2=lugar.construccion.habitacion --seed 7 --limit 25",
       {{"language", "es"}, {"noun", "olor"}, {"sense", "olfato"},
        {"selection", "1:material.sustancia.liquido_no_consumible,2:lugar.construccion.habitacion"},
        {"seed", 7}, {"limit", 25}}},
      {"--lang fr --noun mort --sense deces --select 1=animado.humano.familia "
       "--select 2=proceso.natural.patologico --seed 3 --limit 12 --filter --vectors '" + vecs + "'",
       {{"language", "fr"}, {"noun", "mort"}, {"sense", "deces"},
        {"selection", "1:animado.humano.familia,2:proceso.natural.patologico"},
        {"seed", 3}, {"limit", 12}, {"filter", true}}},
      {"--lang es --noun olor --sense olfato --select 1=material.sustancia.excremento --frame es-olor-1 "
       "--seed 5 --limit 6",
       {{"language", "es"}, {"noun", "olor"}, {"sense", "olfato"}, {"selection", "1:material.sustancia.excremento"},
        {"frame", "es-olor-1"}, {"seed", 5}, {"limit", 6}}},
  };
  int identical = 0;
  for (const Case& c : cases) {
    std::string cli = run_command(std::string("'") + COMBI_CLI + "' generate --bundle '" + bundle + "' " + c.args +
                                  " --format json 2>/dev/null");
    HttpResponse r = api.handle({"POST", "/api/export", {{"format", "json"}}, c.body.dump()});
    if (r.status == 200 && !cli.empty() && cli == r.body) ++identical;
  }
  std::string d = "JSON equal after import, CSV " + std::to_string(lines) + " lines for " +
                  std::to_string(phrases.size()) + " phrases, CLI==service " + std::to_string(identical) + "/" +
                  std::to_string(cases.size());
  return {identical == static_cast<int>(cases.size()), d};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, reachability},       {2, contrast_suite}, {3, restricted_randomness},
      {4, prototype_ranking},  {5, adjective_tally}, {6, filter_oracle},
      {7, contraction_totality}, {8, closure},       {9, export_round_trips},
  };
  int failed = 0;
  for (const auto& [n, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
