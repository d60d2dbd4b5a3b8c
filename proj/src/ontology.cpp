#include "combi/ontology.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "combi/error.hpp"
#include "combi/text.hpp"

namespace combi {

namespace {

const ArgumentSlot& require_slot(const Lexicon& lex, const SlotRef& ref) {
  const ArgumentSchema& schema = require_schema(lex, ref.language, ref.noun, ref.sense_id);
  const ArgumentSlot* slot = schema.slot(ref.slot);
  if (!slot) {
    throw NotFoundError("noun \"" + ref.noun + "\" sense \"" + ref.sense_id + "\" has no slot " +
                        std::to_string(ref.slot));
  }
  return *slot;
}

std::size_t count_below(const ArgumentSlot& slot, std::string_view class_id) {
  std::set<std::string> seen;
  for (const auto& [key, candidates] : slot.membership) {
    if (!Lexicon::is_within(key, class_id)) continue;
    for (const Candidate& c : candidates) seen.insert(c.lemma);
  }
  return seen.size();
}

}  // namespace

void require_class_allowed(const Lexicon& lex, const ArgumentSlot& slot, std::string_view class_id) {
  if (!lex.ontology_class(class_id)) {
    throw DomainError("class \"" + std::string(class_id) + "\" is not declared");
  }
  for (const std::string& allowed : slot.allowed_classes) {
    if (Lexicon::is_within(class_id, allowed) || Lexicon::is_within(allowed, class_id)) return;
  }
  throw DomainError("class \"" + std::string(class_id) + "\" is not allowed in slot " +
                    std::to_string(slot.index));
}

std::vector<ClassChoice> drilldown(const Lexicon& lex, const SlotRef& ref,
                                   std::optional<std::string_view> parent) {
  const ArgumentSlot& slot = require_slot(lex, ref);
  std::vector<const OntologyClass*> level;
  if (parent) {
    if (!lex.ontology_class(*parent)) {
      throw NotFoundError("unknown class \"" + std::string(*parent) + "\"");
    }
    level = lex.children(*parent);
  } else {
    level = lex.roots();
  }
  std::vector<ClassChoice> out;
  for (const OntologyClass* c : level) {
    std::size_t n = count_below(slot, c->id);
    if (n == 0) continue;
    ClassChoice choice;
    choice.cls = c;
    choice.member_count = n;
    choice.example = c->example_lemma;
    if (choice.example.empty()) {
      auto first = classed_members(lex, slot, c->id);
      if (!first.empty()) choice.example = first.front().candidate.lemma;
    }
    out.push_back(std::move(choice));
  }
  return out;
}

std::vector<ClassedCandidate> classed_members(const Lexicon&, const ArgumentSlot& slot,
                                              std::string_view class_id) {
  std::vector<ClassedCandidate> out;
  std::set<std::string> seen;
  for (const auto& [key, candidates] : slot.membership) {
    if (!Lexicon::is_within(key, class_id)) continue;
    for (const Candidate& c : candidates) {
      if (seen.insert(c.lemma).second) out.push_back({c, key});
    }
  }
  return out;
}

std::vector<Candidate> members(const Lexicon& lex, const SlotRef& ref, std::string_view class_id) {
  const ArgumentSlot& slot = require_slot(lex, ref);
  require_class_allowed(lex, slot, class_id);
  std::vector<Candidate> out;
  for (ClassedCandidate& c : classed_members(lex, slot, class_id)) out.push_back(std::move(c.candidate));
  return out;
}

std::vector<Prototype> rank_prototypes(const Lexicon& lex, const SlotRef& ref) {
  const CooccurrenceTable* table = lex.cooccurrence(ref.language, ref.noun, ref.sense_id, ref.slot);
  if (!table) {
    throw NotFoundError("no co-occurrence table for " + ref.noun + "/" + ref.sense_id + " slot " +
                        std::to_string(ref.slot));
  }
  std::vector<Prototype> out;
  for (const CooccurrenceCount& c : table->counts) {
    out.push_back({c.lemma, ref, c.count, 0, c.class_id});
  }
  std::sort(out.begin(), out.end(), [](const Prototype& a, const Prototype& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.lemma < b.lemma;
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = static_cast<int>(i) + 1;
  return out;
}

// --- lexical resource ---------------------------------------------------------

FileLexicalResource FileLexicalResource::from_string(std::string_view document) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text::nfc(document));
  } catch (const nlohmann::json::parse_error& e) {
    throw ResourceError(std::string("malformed lexical resource: ") + e.what());
  }
  if (!root.is_array()) throw ResourceError("lexical resource must be an array of records");
  FileLexicalResource resource;
  try {
    for (const auto& item : root) {
      Record r;
      r.lemma = item.at("lemma").get<std::string>();
      auto lang = parse_enum<Language>(item.at("language").get<std::string>());
      if (!lang) throw ResourceError("unknown language in lexical resource record " + r.lemma);
      r.language = *lang;
      r.class_path = item.value("class", std::string());
      r.synonyms = item.value("synonyms", std::vector<std::string>{});
      r.hypernyms = item.value("hypernyms", std::vector<std::string>{});
      resource.records_.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ResourceError(std::string("malformed lexical resource record: ") + e.what());
  }
  return resource;
}

FileLexicalResource FileLexicalResource::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open lexical resource " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_string(buffer.str());
}

std::vector<ResourceItem> FileLexicalResource::synonyms_of(std::string_view lemma,
                                                           Language language) const {
  // Declared synonyms plus sister terms: records sharing a hypernym with `lemma`.
  std::set<std::string> hypernyms;
  for (const Record& r : records_) {
    if (r.language == language && r.lemma == lemma) hypernyms.insert(r.hypernyms.begin(), r.hypernyms.end());
  }
  std::vector<ResourceItem> out;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const Record& r = records_[i];
    if (r.language != language || r.lemma == lemma) continue;
    bool related = std::find(r.synonyms.begin(), r.synonyms.end(), lemma) != r.synonyms.end();
    for (const std::string& h : r.hypernyms) related = related || hypernyms.count(h) > 0;
    if (related) out.push_back({r.lemma, r.class_path, i});
  }
  return out;
}

std::vector<ResourceItem> FileLexicalResource::hyponyms_of(std::string_view anchor,
                                                           Language language) const {
  std::vector<ResourceItem> out;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const Record& r = records_[i];
    if (r.language != language) continue;
    if (std::find(r.hypernyms.begin(), r.hypernyms.end(), anchor) != r.hypernyms.end()) {
      out.push_back({r.lemma, r.class_path, i});
    }
  }
  return out;
}

std::vector<ExpansionCandidate> expand_candidates(const Lexicon& lex, const LexicalResource& resource,
                                                  const SlotRef& ref, std::string_view class_id) {
  const ArgumentSlot& slot = require_slot(lex, ref);
  require_class_allowed(lex, slot, class_id);
  std::vector<ClassedCandidate> seeds = classed_members(lex, slot, class_id);
  if (seeds.empty()) return {};

  std::set<std::string> known;
  for (const auto& [key, candidates] : slot.membership) {
    for (const Candidate& c : candidates) known.insert(c.lemma);
  }

  std::vector<std::string> anchors;
  for (const ClassedCandidate& s : seeds) anchors.push_back(s.candidate.lemma);
  if (const OntologyClass* c = lex.ontology_class(class_id); c && !c->example_lemma.empty()) {
    anchors.push_back(c->example_lemma);
  }

  std::vector<ResourceItem> found;
  for (const std::string& anchor : anchors) {
    for (ResourceItem& item : resource.synonyms_of(anchor, ref.language)) found.push_back(std::move(item));
    for (ResourceItem& item : resource.hyponyms_of(anchor, ref.language)) found.push_back(std::move(item));
  }
  std::sort(found.begin(), found.end(), [](const ResourceItem& a, const ResourceItem& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.lemma < b.lemma;
  });

  std::vector<ExpansionCandidate> out;
  std::set<std::string> emitted;
  for (const ResourceItem& item : found) {
    if (item.class_path.empty() || !Lexicon::is_within(item.class_path, class_id)) continue;
    if (known.count(item.lemma) || !emitted.insert(item.lemma).second) continue;
    out.push_back({item.lemma, item.class_path, true});
  }
  return out;
}

// --- adjective tally ----------------------------------------------------------

int percent_half_up(std::size_t part, std::size_t total) {
  if (total == 0) return 0;
  return static_cast<int>((200 * part + total) / (2 * total));
}

int RoleDistribution::percent(std::string_view label) const {
  for (const RoleShare& s : shares) {
    if (s.label == label) return s.percent;
  }
  return 0;
}

RoleDistribution classify_adjectives(const Lexicon& lex, Language language, std::string_view noun,
                                     std::string_view sense_id, AdjectivePosition position) {
  const AdjectiveAnnotation* a = lex.adjective_annotation(language, noun, sense_id, position);
  if (!a || a->items.empty()) {
    throw NotFoundError("no " + std::string(name_of(position)) + " adjective annotations for " +
                        std::string(noun));
  }
  std::size_t non_specific = 0;
  std::map<int, std::size_t> by_slot;
  for (const AnnotatedAdjective& item : a->items) {
    if (item.slot) {
      ++by_slot[*item.slot];
    } else {
      ++non_specific;
    }
  }
  RoleDistribution d;
  d.total = a->items.size();
  if (non_specific) d.shares.push_back({"non-specific", non_specific, percent_half_up(non_specific, d.total)});
  for (const auto& [slot, n] : by_slot) {
    d.shares.push_back({"arg" + std::to_string(slot), n, percent_half_up(n, d.total)});
  }
  return d;
}

}  // namespace combi
