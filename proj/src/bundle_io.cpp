#include <fstream>
#include <sstream>

#include "json.hpp"

#include "combi/error.hpp"
#include "combi/lexicon.hpp"
#include "combi/text.hpp"

namespace combi {

namespace {

using Json = nlohmann::ordered_json;

// Cursor over a JSON value that remembers its JSON pointer for error messages.
class Node {
 public:
  Node(const Json& value, std::string path) : value_(&value), path_(std::move(path)) {}

  const Json& json() const { return *value_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(path_.empty() ? "/" : path_, message);
  }

  bool has(const char* key) const {
    return value_->is_object() && value_->contains(key) && !(*value_)[key].is_null();
  }

  Node at(const char* key) const {
    if (!value_->is_object()) fail("expected an object");
    auto it = value_->find(key);
    if (it == value_->end()) fail(std::string("missing key \"") + key + "\"");
    return Node(*it, path_ + "/" + key);
  }

  Node at(std::size_t index) const { return Node((*value_)[index], path_ + "/" + std::to_string(index)); }

  std::vector<Node> items() const {
    if (!value_->is_array()) fail("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < value_->size(); ++i) out.push_back(at(i));
    return out;
  }

  std::vector<std::pair<std::string, Node>> fields() const {
    if (!value_->is_object()) fail("expected an object");
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = value_->begin(); it != value_->end(); ++it) {
      out.emplace_back(it.key(), Node(it.value(), path_ + "/" + it.key()));
    }
    return out;
  }

  std::string str() const {
    if (!value_->is_string()) fail("expected a string");
    return value_->get<std::string>();
  }

  std::int64_t integer() const {
    if (!value_->is_number_integer()) fail("expected an integer");
    return value_->get<std::int64_t>();
  }

  bool boolean() const {
    if (!value_->is_boolean()) fail("expected a boolean");
    return value_->get<bool>();
  }

  template <typename E>
  E enumeration() const {
    auto parsed = parse_enum<E>(str());
    if (!parsed) fail("unknown value \"" + str() + "\"");
    return *parsed;
  }

  std::string opt_str(const char* key, std::string fallback = {}) const {
    return has(key) ? at(key).str() : fallback;
  }

  bool opt_bool(const char* key, bool fallback = false) const {
    return has(key) ? at(key).boolean() : fallback;
  }

  template <typename E>
  E opt_enum(const char* key, E fallback) const {
    return has(key) ? at(key).enumeration<E>() : fallback;
  }

  template <typename E>
  std::optional<E> maybe_enum(const char* key) const {
    if (!has(key)) return std::nullopt;
    return at(key).enumeration<E>();
  }

  std::vector<std::string> strings(const char* key) const {
    std::vector<std::string> out;
    if (!has(key)) return out;
    for (const Node& n : at(key).items()) out.push_back(n.str());
    return out;
  }

 private:
  const Json* value_;
  std::string path_;
};

std::map<Language, std::string> read_gloss(const Node& node) {
  std::map<Language, std::string> out;
  if (!node.has("gloss")) return out;
  Node gloss = node.at("gloss");
  if (gloss.json().is_string()) {
    out[Language::es] = gloss.str();
    return out;
  }
  for (const auto& [key, value] : gloss.fields()) {
    auto lang = parse_enum<Language>(key);
    if (!lang) value.fail("unknown language \"" + key + "\"");
    out[*lang] = value.str();
  }
  return out;
}

std::optional<Case> read_case(const Node& node) { return node.maybe_enum<Case>("case"); }

int read_slot_number(const Node& node) {
  std::int64_t v = node.integer();
  if (v < 1 || v > 64) node.fail("slot index out of range");
  return static_cast<int>(v);
}

BundleMeta read_meta(const Node& node) {
  BundleMeta meta;
  meta.name = node.opt_str("name");
  meta.version = node.opt_str("version");
  if (node.has("languages")) {
    for (const Node& n : node.at("languages").items()) meta.languages.push_back(n.enumeration<Language>());
  }
  return meta;
}

SemanticRole read_role(const Node& node) {
  SemanticRole role;
  role.id = node.at("id").str();
  role.group = node.at("group").enumeration<RoleGroup>();
  role.gloss = read_gloss(node);
  return role;
}

OntologyClass read_class(const Node& node) {
  OntologyClass c;
  c.id = node.at("id").str();
  if (c.id.empty() || c.id.front() == '.' || c.id.back() == '.' ||
      c.id.find("..") != std::string::npos) {
    node.at("id").fail("malformed class id \"" + c.id + "\"");
  }
  auto dot = c.id.rfind('.');
  if (dot != std::string::npos) c.parent = c.id.substr(0, dot);
  c.depth = 1 + static_cast<int>(std::count(c.id.begin(), c.id.end(), '.'));
  c.gloss = read_gloss(node);
  c.example_lemma = node.opt_str("example");
  c.connotation = node.opt_enum<Polarity>("connotation", Polarity::neutral);
  return c;
}

LexicalEntry read_entry(const Node& node) {
  LexicalEntry e;
  e.lemma = node.at("lemma").str();
  e.language = node.at("language").enumeration<Language>();
  e.pos = node.opt_enum<PartOfSpeech>("pos", PartOfSpeech::noun);
  e.gender = node.opt_enum<Gender>("gender", Gender::none);
  bool singular_declared = false;
  for (const auto& [key, value] : node.at("forms").fields()) {
    auto form_key = parse_form_key(key);
    if (!form_key) value.fail("malformed form key \"" + key + "\"");
    if (form_key->number == Number::singular) singular_declared = true;
    if (value.json().is_null()) {
      e.forms[*form_key] = std::nullopt;
    } else {
      e.forms[*form_key] = value.str();
    }
  }
  if (!singular_declared) {
    node.at("forms").fail("entry \"" + e.lemma +
                          "\" lacks a singular form; declare it null for plural-only nouns");
  }
  e.class_tags = node.strings("classes");
  e.polarity = node.opt_enum<Polarity>("polarity", Polarity::neutral);
  e.vowel_initial = node.opt_bool("vowel_initial", text::vowel_initial(e.lemma));
  e.proper = node.opt_bool("proper");
  e.stressed_a = node.opt_bool("stressed_a");
  e.compound_form = node.opt_str("compound_form");
  return e;
}

FormalRealization read_realization(const Node& node) {
  FormalRealization r;
  r.kind = node.at("kind").enumeration<RealizationKind>();
  r.preposition = node.opt_str("preposition");
  r.determiner_policy = node.opt_enum<DeterminerPolicy>("determiner", DeterminerPolicy::any);
  r.filler_number_policy = node.opt_enum<NumberPolicy>("number", NumberPolicy::both);
  r.case_government = read_case(node);
  r.classes = node.strings("classes");
  r.closing = node.opt_bool("closing");
  r.filler_first = node.opt_bool("filler_first");
  return r;
}

ArgumentSlot read_slot(const Node& node) {
  ArgumentSlot slot;
  slot.index = read_slot_number(node.at("index"));
  slot.role = node.at("role").str();
  for (const Node& r : node.at("realizations").items()) slot.realizations.push_back(read_realization(r));
  slot.allowed_classes = node.strings("classes");
  if (node.has("requires")) {
    for (const Node& n : node.at("requires").items()) slot.requires_slots.insert(read_slot_number(n));
  }
  if (node.has("paired")) {
    Node p = node.at("paired");
    PairedRealization paired;
    paired.preposition = p.at("preposition").str();
    paired.case_government = read_case(p);
    paired.determiner_policy = p.opt_enum<DeterminerPolicy>("determiner", DeterminerPolicy::forbidden);
    paired.classes = p.strings("classes");
    slot.paired = paired;
  }
  if (node.has("members")) {
    for (const auto& [class_id, list] : node.at("members").fields()) {
      std::vector<Candidate>& candidates = slot.membership[class_id];
      for (const Node& item : list.items()) {
        Candidate c;
        if (item.json().is_string()) {
          c.lemma = item.str();
        } else {
          c.lemma = item.at("lemma").str();
          c.number = item.opt_enum<NumberPolicy>("number", NumberPolicy::both);
        }
        candidates.push_back(std::move(c));
      }
    }
  }
  return slot;
}

ArgumentSchema read_sense(const Node& node, Language language, const std::string& lemma) {
  ArgumentSchema s;
  s.head_lemma = lemma;
  s.language = language;
  s.sense_id = node.at("id").str();
  s.sense_gloss = node.opt_str("gloss");
  s.head_number_policy = node.opt_enum<HeadNumberPolicy>("head_number", HeadNumberPolicy::both);
  if (node.has("slots")) {
    for (const Node& n : node.at("slots").items()) s.slots.push_back(read_slot(n));
  }
  if (node.has("order")) {
    for (const Node& n : node.at("order").items()) s.order.push_back(read_slot_number(n));
  }
  if (node.has("co_restrictions")) {
    for (const Node& n : node.at("co_restrictions").items()) {
      NumberCoRestriction rule;
      rule.head = n.at("head").enumeration<Number>();
      rule.slot = read_slot_number(n.at("slot"));
      rule.filler = n.at("filler").enumeration<Number>();
      s.co_restrictions.push_back(rule);
    }
  }
  if (node.has("class_head_number")) {
    for (const Node& n : node.at("class_head_number").items()) {
      ClassHeadNumber rule;
      rule.slot = read_slot_number(n.at("slot"));
      rule.class_id = n.at("class").str();
      rule.head = n.at("head").enumeration<Number>();
      s.class_head_number.push_back(rule);
    }
  }
  return s;
}

SentenceFrame read_frame(const Node& node) {
  SentenceFrame f;
  f.id = node.at("id").str();
  f.language = node.at("language").enumeration<Language>();
  f.noun = node.at("noun").str();
  f.sense_id = node.at("sense").str();
  f.verb_position = node.at("verb_position").enumeration<VerbPosition>();
  for (const Node& p : node.at("pattern").items()) {
    ClausePart part;
    part.function = p.at("function").enumeration<ClauseFunction>();
    part.np_host = p.opt_bool("np_host");
    part.preposition = p.opt_str("preposition");
    part.case_government = read_case(p);
    if (p.has("options")) {
      for (const Node& o : p.at("options").items()) {
        FrameOption option;
        if (o.json().is_string()) {
          option.text = o.str();
        } else {
          option.text = o.opt_str("text");
          option.plural_text = o.opt_str("plural_text");
          option.adjective = o.opt_str("adjective");
          option.prefix = o.opt_str("prefix");
          option.polarity = o.opt_enum<Polarity>("polarity", Polarity::neutral);
          if (o.has("requires")) {
            for (const Node& r : o.at("requires").items()) {
              option.requires_classes.push_back(
                  {read_slot_number(r.at("slot")), r.at("class").str()});
            }
          }
        }
        part.options.push_back(std::move(option));
      }
    }
    f.pattern.push_back(std::move(part));
  }
  f.np_adjectives = node.strings("np_adjectives");
  f.standard_example = node.opt_str("standard_example");
  return f;
}

AdjectiveAnnotation read_annotation(const Node& node) {
  AdjectiveAnnotation a;
  a.language = node.at("language").enumeration<Language>();
  a.noun = node.at("noun").str();
  a.sense_id = node.at("sense").str();
  a.position = node.at("position").enumeration<AdjectivePosition>();
  for (const Node& n : node.at("items").items()) {
    AnnotatedAdjective item;
    item.adjective = n.at("adjective").str();
    std::string label = n.at("label").str();
    if (label == "non-specific") {
      item.slot = std::nullopt;
    } else if (label.size() > 3 && label.compare(0, 3, "arg") == 0 &&
               label.find_first_not_of("0123456789", 3) == std::string::npos) {
      item.slot = std::stoi(label.substr(3));
    } else {
      n.at("label").fail("unknown label \"" + label + "\"");
    }
    item.class_id = n.opt_str("class");
    a.items.push_back(std::move(item));
  }
  return a;
}

CooccurrenceTable read_cooccurrence(const Node& node) {
  CooccurrenceTable t;
  t.language = node.at("language").enumeration<Language>();
  t.noun = node.at("noun").str();
  t.sense_id = node.at("sense").str();
  t.slot = read_slot_number(node.at("slot"));
  for (const Node& n : node.at("counts").items()) {
    CooccurrenceCount c;
    c.lemma = n.at("lemma").str();
    std::int64_t count = n.at("count").integer();
    if (count < 0) n.at("count").fail("negative count");
    c.count = static_cast<std::uint64_t>(count);
    c.class_id = n.opt_str("class");
    t.counts.push_back(std::move(c));
  }
  return t;
}

std::string line_column(std::string_view document, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < document.size(); ++i) {
    if (document[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

LexiconData read_document(const Json& root) {
  Node top(root, "");
  if (!root.is_object()) top.fail("bundle must be an object");
  LexiconData data;
  data.meta = read_meta(top.at("meta"));
  if (top.has("roles")) {
    for (const Node& n : top.at("roles").items()) data.roles.push_back(read_role(n));
  }
  if (top.has("ontology")) {
    for (const Node& n : top.at("ontology").items()) data.ontology.push_back(read_class(n));
  }
  if (top.has("entries")) {
    for (const Node& n : top.at("entries").items()) data.entries.push_back(read_entry(n));
  }
  if (top.has("nouns")) {
    for (const auto& [lang_key, by_lemma] : top.at("nouns").fields()) {
      auto lang = parse_enum<Language>(lang_key);
      if (!lang) by_lemma.fail("unknown language \"" + lang_key + "\"");
      for (const auto& [lemma, noun] : by_lemma.fields()) {
        for (const Node& sense : noun.at("senses").items()) {
          data.schemas.push_back(read_sense(sense, *lang, lemma));
        }
      }
    }
  }
  if (top.has("frames")) {
    for (const Node& n : top.at("frames").items()) data.frames.push_back(read_frame(n));
  }
  if (top.has("adjective_annotations")) {
    for (const Node& n : top.at("adjective_annotations").items()) {
      data.adjective_annotations.push_back(read_annotation(n));
    }
  }
  if (top.has("cooccurrence")) {
    for (const Node& n : top.at("cooccurrence").items()) {
      data.cooccurrence.push_back(read_cooccurrence(n));
    }
  }
  return data;
}

// --- writing ------------------------------------------------------------------

Json write_gloss(const std::map<Language, std::string>& gloss) {
  Json out = Json::object();
  for (const auto& [lang, text] : gloss) out[std::string(name_of(lang))] = text;
  return out;
}

template <typename E>
std::string wire(E value) {
  return std::string(name_of(value));
}

Json write_realization(const FormalRealization& r) {
  Json out = Json::object();
  out["kind"] = wire(r.kind);
  if (!r.preposition.empty()) out["preposition"] = r.preposition;
  if (r.determiner_policy != DeterminerPolicy::any) out["determiner"] = wire(r.determiner_policy);
  if (r.filler_number_policy != NumberPolicy::both) out["number"] = wire(r.filler_number_policy);
  if (r.case_government) out["case"] = wire(*r.case_government);
  if (!r.classes.empty()) out["classes"] = r.classes;
  if (r.closing) out["closing"] = true;
  if (r.filler_first) out["filler_first"] = true;
  return out;
}

Json write_slot(const ArgumentSlot& slot) {
  Json out = Json::object();
  out["index"] = slot.index;
  out["role"] = slot.role;
  Json realizations = Json::array();
  for (const FormalRealization& r : slot.realizations) realizations.push_back(write_realization(r));
  out["realizations"] = realizations;
  out["classes"] = slot.allowed_classes;
  if (!slot.requires_slots.empty()) {
    out["requires"] = std::vector<int>(slot.requires_slots.begin(), slot.requires_slots.end());
  }
  if (slot.paired) {
    Json p = Json::object();
    p["preposition"] = slot.paired->preposition;
    if (slot.paired->case_government) p["case"] = wire(*slot.paired->case_government);
    if (slot.paired->determiner_policy != DeterminerPolicy::forbidden) {
      p["determiner"] = wire(slot.paired->determiner_policy);
    }
    if (!slot.paired->classes.empty()) p["classes"] = slot.paired->classes;
    out["paired"] = p;
  }
  if (!slot.membership.empty()) {
    Json members = Json::object();
    for (const auto& [class_id, candidates] : slot.membership) {
      Json list = Json::array();
      for (const Candidate& c : candidates) {
        if (c.number == NumberPolicy::both) {
          list.push_back(c.lemma);
        } else {
          list.push_back(Json{{"lemma", c.lemma}, {"number", wire(c.number)}});
        }
      }
      members[class_id] = list;
    }
    out["members"] = members;
  }
  return out;
}

Json write_sense(const ArgumentSchema& s) {
  Json out = Json::object();
  out["id"] = s.sense_id;
  if (!s.sense_gloss.empty()) out["gloss"] = s.sense_gloss;
  if (s.head_number_policy != HeadNumberPolicy::both) out["head_number"] = wire(s.head_number_policy);
  Json slots = Json::array();
  for (const ArgumentSlot& slot : s.slots) slots.push_back(write_slot(slot));
  out["slots"] = slots;
  if (!s.order.empty()) out["order"] = s.order;
  if (!s.co_restrictions.empty()) {
    Json rules = Json::array();
    for (const NumberCoRestriction& r : s.co_restrictions) {
      rules.push_back(Json{{"head", wire(r.head)}, {"slot", r.slot}, {"filler", wire(r.filler)}});
    }
    out["co_restrictions"] = rules;
  }
  if (!s.class_head_number.empty()) {
    Json rules = Json::array();
    for (const ClassHeadNumber& r : s.class_head_number) {
      rules.push_back(Json{{"slot", r.slot}, {"class", r.class_id}, {"head", wire(r.head)}});
    }
    out["class_head_number"] = rules;
  }
  return out;
}

Json write_frame(const SentenceFrame& f) {
  Json out = Json::object();
  out["id"] = f.id;
  out["language"] = wire(f.language);
  out["noun"] = f.noun;
  out["sense"] = f.sense_id;
  out["verb_position"] = wire(f.verb_position);
  Json pattern = Json::array();
  for (const ClausePart& part : f.pattern) {
    Json p = Json::object();
    p["function"] = wire(part.function);
    if (part.np_host) p["np_host"] = true;
    if (!part.preposition.empty()) p["preposition"] = part.preposition;
    if (part.case_government) p["case"] = wire(*part.case_government);
    if (!part.options.empty()) {
      Json options = Json::array();
      for (const FrameOption& o : part.options) {
        Json opt = Json::object();
        if (!o.text.empty()) opt["text"] = o.text;
        if (!o.plural_text.empty()) opt["plural_text"] = o.plural_text;
        if (!o.adjective.empty()) opt["adjective"] = o.adjective;
        if (!o.prefix.empty()) opt["prefix"] = o.prefix;
        if (o.polarity != Polarity::neutral) opt["polarity"] = wire(o.polarity);
        if (!o.requires_classes.empty()) {
          Json reqs = Json::array();
          for (const ClassRequirement& r : o.requires_classes) {
            reqs.push_back(Json{{"slot", r.slot}, {"class", r.class_prefix}});
          }
          opt["requires"] = reqs;
        }
        options.push_back(opt);
      }
      p["options"] = options;
    }
    pattern.push_back(p);
  }
  out["pattern"] = pattern;
  if (!f.np_adjectives.empty()) out["np_adjectives"] = f.np_adjectives;
  if (!f.standard_example.empty()) out["standard_example"] = f.standard_example;
  return out;
}

}  // namespace

Lexicon load_bundle_string(std::string_view document) {
  std::string normalized = text::nfc(document);
  Json root;
  try {
    root = Json::parse(normalized);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(line_column(normalized, byte), "malformed bundle document");
  }
  return Lexicon::build(read_document(root));
}

Lexicon load_bundle(std::istream& source) {
  std::ostringstream buffer;
  buffer << source.rdbuf();
  return load_bundle_string(buffer.str());
}

Lexicon load_bundle_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open bundle file " + path);
  return load_bundle(in);
}

std::string dump_bundle(const Lexicon& lexicon) {
  const LexiconData& data = lexicon.data();
  Json root = Json::object();

  Json meta = Json::object();
  meta["name"] = data.meta.name;
  meta["version"] = data.meta.version;
  Json languages = Json::array();
  for (Language l : data.meta.languages) languages.push_back(wire(l));
  meta["languages"] = languages;
  root["meta"] = meta;

  Json roles = Json::array();
  for (const SemanticRole& r : data.roles) {
    roles.push_back(Json{{"id", r.id}, {"group", wire(r.group)}, {"gloss", write_gloss(r.gloss)}});
  }
  root["roles"] = roles;

  Json ontology = Json::array();
  for (const OntologyClass& c : data.ontology) {
    Json out = Json::object();
    out["id"] = c.id;
    out["gloss"] = write_gloss(c.gloss);
    if (!c.example_lemma.empty()) out["example"] = c.example_lemma;
    if (c.connotation != Polarity::neutral) out["connotation"] = wire(c.connotation);
    ontology.push_back(out);
  }
  root["ontology"] = ontology;

  Json entries = Json::array();
  for (const LexicalEntry& e : data.entries) {
    Json out = Json::object();
    out["lemma"] = e.lemma;
    out["language"] = wire(e.language);
    if (e.pos != PartOfSpeech::noun) out["pos"] = wire(e.pos);
    if (e.gender != Gender::none) out["gender"] = wire(e.gender);
    Json forms = Json::object();
    for (const auto& [key, form] : e.forms) {
      forms[format_form_key(key)] = form ? Json(*form) : Json(nullptr);
    }
    out["forms"] = forms;
    if (!e.class_tags.empty()) out["classes"] = e.class_tags;
    if (e.polarity != Polarity::neutral) out["polarity"] = wire(e.polarity);
    if (e.vowel_initial != text::vowel_initial(e.lemma)) out["vowel_initial"] = e.vowel_initial;
    if (e.proper) out["proper"] = true;
    if (e.stressed_a) out["stressed_a"] = true;
    if (!e.compound_form.empty()) out["compound_form"] = e.compound_form;
    entries.push_back(out);
  }
  root["entries"] = entries;

  // Schemas are grouped by language and lemma. Declaration order within the
  // group is kept; a lemma reappearing later is merged into its first group.
  Json nouns = Json::object();
  for (const ArgumentSchema& s : data.schemas) {
    Json& by_lemma = nouns[wire(s.language)];
    if (by_lemma.is_null()) by_lemma = Json::object();
    Json& noun = by_lemma[s.head_lemma];
    if (noun.is_null()) noun = Json{{"senses", Json::array()}};
    noun["senses"].push_back(write_sense(s));
  }
  root["nouns"] = nouns;

  Json frames = Json::array();
  for (const SentenceFrame& f : data.frames) frames.push_back(write_frame(f));
  root["frames"] = frames;

  Json annotations = Json::array();
  for (const AdjectiveAnnotation& a : data.adjective_annotations) {
    Json items = Json::array();
    for (const AnnotatedAdjective& item : a.items) {
      Json out = Json::object();
      out["adjective"] = item.adjective;
      out["label"] = item.slot ? "arg" + std::to_string(*item.slot) : std::string("non-specific");
      if (!item.class_id.empty()) out["class"] = item.class_id;
      items.push_back(out);
    }
    annotations.push_back(Json{{"language", wire(a.language)},
                               {"noun", a.noun},
                               {"sense", a.sense_id},
                               {"position", wire(a.position)},
                               {"items", items}});
  }
  root["adjective_annotations"] = annotations;

  Json tables = Json::array();
  for (const CooccurrenceTable& t : data.cooccurrence) {
    Json counts = Json::array();
    for (const CooccurrenceCount& c : t.counts) {
      Json out = Json{{"lemma", c.lemma}, {"count", c.count}};
      if (!c.class_id.empty()) out["class"] = c.class_id;
      counts.push_back(out);
    }
    tables.push_back(Json{{"language", wire(t.language)},
                          {"noun", t.noun},
                          {"sense", t.sense_id},
                          {"slot", t.slot},
                          {"counts", counts}});
  }
  root["cooccurrence"] = tables;

  return root.dump(2) + "\n";
}

}  // namespace combi
