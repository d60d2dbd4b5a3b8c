#include "combi/export.hpp"

#include <algorithm>

#include "combi/error.hpp"

namespace combi {

using nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename E>
E enum_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) throw ParseError(key, "missing string field");
  auto v = parse_enum<E>(j.at(key).get<std::string>());
  if (!v) throw ParseError(key, "unknown value \"" + j.at(key).get<std::string>() + "\"");
  return *v;
}

}  // namespace

ordered_json trace_to_json(const std::vector<TraceItem>& trace) {
  ordered_json out = ordered_json::array();
  for (const TraceItem& t : trace) {
    ordered_json item;
    item["slot"] = t.slot;
    item["role"] = t.role;
    item["class"] = t.class_id;
    item["lemma"] = t.lemma;
    item["number"] = name_of(t.number);
    item["determiner"] = name_of(t.determiner);
    if (t.paired) {
      item["paired"] = {{"lemma", t.paired->lemma},
                        {"number", name_of(t.paired->number)},
                        {"determiner", name_of(t.paired->determiner)}};
    }
    out.push_back(std::move(item));
  }
  return out;
}

ordered_json phrase_to_json(const GeneratedPhrase& phrase) {
  ordered_json j;
  j["surface"] = phrase.surface;
  j["trace"] = trace_to_json(phrase.trace);
  if (phrase.score) j["score"] = *phrase.score;
  return j;
}

std::string export_json(const std::vector<GeneratedPhrase>& phrases) {
  ordered_json out = ordered_json::array();
  for (const GeneratedPhrase& p : phrases) out.push_back(phrase_to_json(p));
  return out.dump(2) + "\n";
}

std::vector<GeneratedPhrase> import_json(std::string_view document) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_array()) throw ParseError("/", "expected an array of phrases");
  std::vector<GeneratedPhrase> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const ordered_json& j = doc[i];
    GeneratedPhrase p;
    try {
      p.surface = j.at("surface").get<std::string>();
      for (const ordered_json& t : j.at("trace")) {
        TraceItem item;
        item.slot = t.at("slot").get<int>();
        item.role = t.at("role").get<std::string>();
        item.class_id = t.at("class").get<std::string>();
        item.lemma = t.at("lemma").get<std::string>();
        item.number = enum_field<Number>(t, "number");
        item.determiner = enum_field<Determiner>(t, "determiner");
        if (t.contains("paired")) {
          const ordered_json& pj = t.at("paired");
          item.paired = PairedFiller{pj.at("lemma").get<std::string>(), enum_field<Number>(pj, "number"),
                                     enum_field<Determiner>(pj, "determiner")};
        }
        p.trace.push_back(std::move(item));
      }
      if (j.contains("score")) p.score = j.at("score").get<double>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("/" + std::to_string(i), e.what());
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::string export_csv(const std::vector<GeneratedPhrase>& phrases) {
  int slots = 0;
  for (const GeneratedPhrase& p : phrases) {
    for (const TraceItem& t : p.trace) slots = std::max(slots, t.slot);
  }
  std::string out = "surface";
  for (int s = 1; s <= slots; ++s) {
    out += ",slot" + std::to_string(s) + "_lemma,slot" + std::to_string(s) + "_class";
  }
  out += "\n";
  for (const GeneratedPhrase& p : phrases) {
    out += csv_field(p.surface);
    for (int s = 1; s <= slots; ++s) {
      auto it = std::find_if(p.trace.begin(), p.trace.end(), [&](const TraceItem& t) { return t.slot == s; });
      std::string lemma;
      std::string cls;
      if (it != p.trace.end()) {
        lemma = it->lemma;
        if (it->paired) lemma += "/" + it->paired->lemma;
        cls = it->class_id;
      }
      out += "," + csv_field(lemma) + "," + csv_field(cls);
    }
    out += "\n";
  }
  return out;
}

ordered_json verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["status"] = verdict_name(v.status);
  if (v.sense_id) j["sense"] = *v.sense_id;
  if (v.template_id) j["template"] = *v.template_id;
  j["trace"] = trace_to_json(v.trace);
  ordered_json diags = ordered_json::array();
  for (const Diagnosis& d : v.diagnoses) {
    diags.push_back({{"rule", d.rule}, {"message", d.message}, {"span", {d.span.begin, d.span.end}}});
  }
  j["diagnoses"] = std::move(diags);
  j["notes"] = v.notes;
  return j;
}

}  // namespace combi
