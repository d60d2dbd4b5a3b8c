#include "combi/lexicon.hpp"

#include <algorithm>

#include "combi/error.hpp"

namespace combi {

// --- form keys ----------------------------------------------------------------

std::optional<FormKey> parse_form_key(std::string_view text) {
  FormKey key;
  bool have_number = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    std::string_view part =
        text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    if (part == "sg") {
      key.number = Number::singular;
      have_number = true;
    } else if (part == "pl") {
      key.number = Number::plural;
      have_number = true;
    } else if (part == "nom") {
      key.grammatical_case = Case::nominative;
    } else if (part == "acc") {
      key.grammatical_case = Case::accusative;
    } else if (part == "dat") {
      key.grammatical_case = Case::dative;
    } else if (part == "gen") {
      key.grammatical_case = Case::genitive;
    } else if (part == "m") {
      key.gender = Gender::masculine;
    } else if (part == "f") {
      key.gender = Gender::feminine;
    } else if (part == "n") {
      key.gender = Gender::neuter;
    } else {
      return std::nullopt;
    }
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  if (!have_number) return std::nullopt;
  return key;
}

std::string format_form_key(const FormKey& key) {
  std::string out = key.number == Number::singular ? "sg" : "pl";
  switch (key.grammatical_case) {
    case Case::nominative:
      break;
    case Case::accusative:
      out += ".acc";
      break;
    case Case::dative:
      out += ".dat";
      break;
    case Case::genitive:
      out += ".gen";
      break;
  }
  switch (key.gender) {
    case Gender::none:
      break;
    case Gender::masculine:
      out += ".m";
      break;
    case Gender::feminine:
      out += ".f";
      break;
    case Gender::neuter:
      out += ".n";
      break;
  }
  return out;
}

std::optional<std::string> LexicalEntry::form(Number number, Case grammatical_case,
                                              Gender agreement) const {
  const FormKey attempts[] = {
      {number, grammatical_case, agreement},
      {number, grammatical_case, Gender::none},
      {number, Case::nominative, agreement},
      {number, Case::nominative, Gender::none},
  };
  for (const FormKey& key : attempts) {
    auto it = forms.find(key);
    if (it != forms.end()) return it->second;
  }
  return std::nullopt;
}

bool LexicalEntry::has_number(Number number) const {
  return std::any_of(forms.begin(), forms.end(), [number](const auto& kv) {
    return kv.first.number == number && kv.second.has_value();
  });
}

const ArgumentSlot* ArgumentSchema::slot(int index) const {
  for (const ArgumentSlot& s : slots) {
    if (s.index == index) return &s;
  }
  return nullptr;
}

std::size_t ArgumentSchema::position_of(int index) const {
  auto it = std::find(order.begin(), order.end(), index);
  return it == order.end() ? slots.size() : static_cast<std::size_t>(it - order.begin());
}

// --- Lexicon ------------------------------------------------------------------

Lexicon Lexicon::build(LexiconData data) {
  for (ArgumentSchema& schema : data.schemas) {
    if (schema.order.empty()) {
      for (const ArgumentSlot& slot : schema.slots) schema.order.push_back(slot.index);
    }
  }
  Lexicon lexicon(std::move(data));
  lexicon.index();
  lexicon.check_integrity();
  return lexicon;
}

void Lexicon::index() {
  for (std::size_t i = 0; i < data_.roles.size(); ++i) {
    roles_by_id_.emplace(data_.roles[i].id, i);
  }
  for (std::size_t i = 0; i < data_.ontology.size(); ++i) {
    classes_by_id_.emplace(data_.ontology[i].id, i);
  }
  for (std::size_t i = 0; i < data_.entries.size(); ++i) {
    entries_by_key_.emplace(std::make_pair(data_.entries[i].language, data_.entries[i].lemma), i);
  }
  for (std::size_t i = 0; i < data_.frames.size(); ++i) {
    frames_by_id_.emplace(data_.frames[i].id, i);
  }
}

namespace {

std::string where(const ArgumentSchema& schema) {
  return std::string(name_of(schema.language)) + ":" + schema.head_lemma + "/" +
         schema.sense_id;
}

}  // namespace

void Lexicon::check_integrity() const {
  auto need_class = [&](const std::string& id, const std::string& context) {
    if (!ontology_class(id)) {
      throw IntegrityError(id, "unresolved class \"" + id + "\" referenced by " + context);
    }
  };
  auto need_entry = [&](Language language, const std::string& lemma,
                        const std::string& context) {
    if (!entry(language, lemma)) {
      throw IntegrityError(lemma, "unresolved lexical entry \"" + lemma + "\" (" +
                                      std::string(name_of(language)) + ") referenced by " +
                                      context);
    }
  };
  auto need_schema = [&](Language language, const std::string& noun, const std::string& sense,
                         const std::string& context) {
    if (!schema(language, noun, sense)) {
      throw IntegrityError(noun + "/" + sense, "unresolved noun sense \"" + noun + "/" +
                                                   sense + "\" referenced by " + context);
    }
  };

  for (const OntologyClass& c : data_.ontology) {
    if (c.parent && !ontology_class(*c.parent)) {
      throw IntegrityError(*c.parent,
                           "unresolved parent class \"" + *c.parent + "\" of class " + c.id);
    }
  }
  for (const LexicalEntry& e : data_.entries) {
    for (const std::string& tag : e.class_tags) {
      need_class(tag, "entry " + e.lemma);
    }
  }
  for (const ArgumentSchema& s : data_.schemas) {
    const std::string context = "schema " + where(s);
    need_entry(s.language, s.head_lemma, context);
    for (const ArgumentSlot& slot : s.slots) {
      const std::string slot_context = context + " slot " + std::to_string(slot.index);
      if (!role(slot.role)) {
        throw IntegrityError(slot.role,
                             "unresolved role \"" + slot.role + "\" referenced by " + slot_context);
      }
      for (const std::string& c : slot.allowed_classes) need_class(c, slot_context);
      for (const FormalRealization& r : slot.realizations) {
        for (const std::string& c : r.classes) need_class(c, slot_context);
      }
      for (const auto& [class_id, candidates] : slot.membership) {
        need_class(class_id, slot_context);
        for (const Candidate& cand : candidates) {
          need_entry(s.language, cand.lemma, slot_context);
        }
      }
    }
    for (const ClassHeadNumber& rule : s.class_head_number) need_class(rule.class_id, context);
  }
  for (const SentenceFrame& f : data_.frames) {
    const std::string context = "frame " + f.id;
    need_schema(f.language, f.noun, f.sense_id, context);
    for (const std::string& adj : f.np_adjectives) need_entry(f.language, adj, context);
    for (const ClausePart& part : f.pattern) {
      for (const FrameOption& option : part.options) {
        if (!option.adjective.empty()) need_entry(f.language, option.adjective, context);
        for (const ClassRequirement& req : option.requires_classes) {
          need_class(req.class_prefix, context);
        }
      }
    }
  }
  for (const AdjectiveAnnotation& a : data_.adjective_annotations) {
    const std::string context = "adjective annotation " + a.noun;
    need_schema(a.language, a.noun, a.sense_id, context);
    for (const AnnotatedAdjective& item : a.items) {
      if (!item.class_id.empty()) need_class(item.class_id, context);
    }
  }
  for (const CooccurrenceTable& t : data_.cooccurrence) {
    const std::string context = "co-occurrence table " + t.noun;
    need_schema(t.language, t.noun, t.sense_id, context);
    for (const CooccurrenceCount& c : t.counts) {
      need_entry(t.language, c.lemma, context);
      if (!c.class_id.empty()) need_class(c.class_id, context);
    }
  }
}

const SemanticRole* Lexicon::role(std::string_view id) const {
  auto it = roles_by_id_.find(std::string(id));
  return it == roles_by_id_.end() ? nullptr : &data_.roles[it->second];
}

const OntologyClass* Lexicon::ontology_class(std::string_view id) const {
  auto it = classes_by_id_.find(std::string(id));
  return it == classes_by_id_.end() ? nullptr : &data_.ontology[it->second];
}

const LexicalEntry* Lexicon::entry(Language language, std::string_view lemma) const {
  auto it = entries_by_key_.find(std::make_pair(language, std::string(lemma)));
  return it == entries_by_key_.end() ? nullptr : &data_.entries[it->second];
}

const ArgumentSchema* Lexicon::schema(Language language, std::string_view noun,
                                      std::string_view sense_id) const {
  for (const ArgumentSchema& s : data_.schemas) {
    if (s.language == language && s.head_lemma == noun && s.sense_id == sense_id) return &s;
  }
  return nullptr;
}

std::vector<const ArgumentSchema*> Lexicon::schemas_of(Language language,
                                                       std::string_view noun) const {
  std::vector<const ArgumentSchema*> out;
  for (const ArgumentSchema& s : data_.schemas) {
    if (s.language == language && s.head_lemma == noun) out.push_back(&s);
  }
  return out;
}

std::vector<std::string> Lexicon::nouns(Language language) const {
  std::vector<std::string> out;
  for (const ArgumentSchema& s : data_.schemas) {
    if (s.language == language &&
        std::find(out.begin(), out.end(), s.head_lemma) == out.end()) {
      out.push_back(s.head_lemma);
    }
  }
  return out;
}

const SentenceFrame* Lexicon::frame(std::string_view id) const {
  auto it = frames_by_id_.find(std::string(id));
  return it == frames_by_id_.end() ? nullptr : &data_.frames[it->second];
}

const AdjectiveAnnotation* Lexicon::adjective_annotation(Language language,
                                                         std::string_view noun,
                                                         std::string_view sense_id,
                                                         AdjectivePosition position) const {
  for (const AdjectiveAnnotation& a : data_.adjective_annotations) {
    if (a.language == language && a.noun == noun && a.sense_id == sense_id &&
        a.position == position) {
      return &a;
    }
  }
  return nullptr;
}

const CooccurrenceTable* Lexicon::cooccurrence(Language language, std::string_view noun,
                                               std::string_view sense_id, int slot) const {
  for (const CooccurrenceTable& t : data_.cooccurrence) {
    if (t.language == language && t.noun == noun && t.sense_id == sense_id && t.slot == slot) {
      return &t;
    }
  }
  return nullptr;
}

std::vector<const OntologyClass*> Lexicon::children(std::string_view class_id) const {
  std::vector<const OntologyClass*> out;
  for (const OntologyClass& c : data_.ontology) {
    if (c.parent && *c.parent == class_id) out.push_back(&c);
  }
  return out;
}

std::vector<const OntologyClass*> Lexicon::roots() const {
  std::vector<const OntologyClass*> out;
  for (const OntologyClass& c : data_.ontology) {
    if (!c.parent) out.push_back(&c);
  }
  return out;
}

bool Lexicon::is_within(std::string_view class_id, std::string_view ancestor) {
  if (class_id.size() < ancestor.size()) return false;
  if (class_id.substr(0, ancestor.size()) != ancestor) return false;
  return class_id.size() == ancestor.size() || class_id[ancestor.size()] == '.';
}

Polarity Lexicon::connotation(std::string_view class_id) const {
  const OntologyClass* c = ontology_class(class_id);
  while (c) {
    if (c->connotation != Polarity::neutral) return c->connotation;
    c = c->parent ? ontology_class(*c->parent) : nullptr;
  }
  return Polarity::neutral;
}

// --- queries ------------------------------------------------------------------

std::vector<SenseSchema> schemas_for(const Lexicon& lexicon, Language language,
                                     std::string_view lemma) {
  std::vector<SenseSchema> out;
  for (const ArgumentSchema* s : lexicon.schemas_of(language, lemma)) {
    out.push_back({s->sense_id, s});
  }
  if (out.empty()) {
    throw NotFoundError("unknown noun \"" + std::string(lemma) + "\" for language " +
                        std::string(name_of(language)));
  }
  std::stable_sort(out.begin(), out.end(), [](const SenseSchema& a, const SenseSchema& b) {
    return a.sense_id < b.sense_id;
  });
  return out;
}

const ArgumentSchema& require_schema(const Lexicon& lexicon, Language language,
                                     std::string_view noun, std::string_view sense_id) {
  if (const ArgumentSchema* s = lexicon.schema(language, noun, sense_id)) return *s;
  if (lexicon.schemas_of(language, noun).empty()) {
    throw NotFoundError("unknown noun \"" + std::string(noun) + "\" for language " +
                        std::string(name_of(language)));
  }
  throw NotFoundError("unknown sense \"" + std::string(sense_id) + "\" of noun \"" +
                      std::string(noun) + "\"");
}

// --- validation ---------------------------------------------------------------

namespace {

bool class_related(std::string_view a, std::string_view b) {
  return Lexicon::is_within(a, b) || Lexicon::is_within(b, a);
}

}  // namespace

ValidationReport validate_bundle(const Lexicon& lexicon) {
  ValidationReport report;
  auto add = [&](std::string code, std::string subject, std::string message) {
    report.findings.push_back({std::move(code), std::move(subject), std::move(message)});
  };

  std::set<std::tuple<Language, std::string, std::string>> senses;
  for (const ArgumentSchema& s : lexicon.schemas()) {
    const std::string subject = where(s);
    if (!senses.emplace(s.language, s.head_lemma, s.sense_id).second) {
      add("duplicate-sense", subject, "sense id declared twice for this noun");
    }
    // Indices contiguous from 1 and surface order a permutation of them.
    std::vector<int> indices;
    for (const ArgumentSlot& slot : s.slots) indices.push_back(slot.index);
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i) + 1) {
        add("slot-invariant", subject, "slot indices are not contiguous from Arg1");
        break;
      }
    }
    std::vector<int> order = s.order;
    std::sort(order.begin(), order.end());
    if (order != sorted) add("slot-invariant", subject, "surface order is not a permutation of the slots");

    for (const NumberCoRestriction& rule : s.co_restrictions) {
      if (!s.slot(rule.slot)) {
        add("slot-invariant", subject,
            "number co-restriction names missing slot " + std::to_string(rule.slot));
      }
    }
    for (const ClassHeadNumber& rule : s.class_head_number) {
      if (!s.slot(rule.slot)) {
        add("slot-invariant", subject,
            "class-conditioned head number names missing slot " + std::to_string(rule.slot));
      }
    }

    for (const ArgumentSlot& slot : s.slots) {
      const std::string slot_subject = subject + "#" + std::to_string(slot.index);
      if (slot.allowed_classes.empty()) {
        add("slot-invariant", slot_subject, "slot has no allowed classes");
      }
      if (slot.realizations.empty()) {
        add("slot-invariant", slot_subject, "slot has no formal realization");
      }
      for (int req : slot.requires_slots) {
        if (req == slot.index || !s.slot(req)) {
          add("slot-invariant", slot_subject,
              "requires-slots names slot " + std::to_string(req) + " outside the schema");
        }
      }
      for (const FormalRealization& r : slot.realizations) {
        if (r.kind == RealizationKind::prepositional && r.preposition.empty()) {
          add("slot-invariant", slot_subject, "prepositional realization without preposition");
        }
        if ((r.kind == RealizationKind::genitive || r.kind == RealizationKind::compound) &&
            s.language != Language::de) {
          add("realization-language-mismatch", slot_subject,
              std::string(name_of(r.kind)) + " realization on a non-German noun");
        }
        if (r.kind == RealizationKind::apposition &&
            r.determiner_policy != DeterminerPolicy::forbidden) {
          add("slot-invariant", slot_subject, "apposition must forbid determiners");
        }
        for (const std::string& c : r.classes) {
          bool ok = std::any_of(slot.allowed_classes.begin(), slot.allowed_classes.end(),
                                [&](const std::string& a) { return class_related(c, a); });
          if (!ok) {
            add("slot-invariant", slot_subject,
                "realization class " + c + " is outside the slot's allowed classes");
          }
        }
      }
      for (const auto& [class_id, candidates] : slot.membership) {
        bool ok = std::any_of(slot.allowed_classes.begin(), slot.allowed_classes.end(),
                              [&](const std::string& a) { return Lexicon::is_within(class_id, a); });
        if (!ok) {
          add("slot-invariant", slot_subject,
              "membership class " + class_id + " is not allowed for the slot");
        }
      }
      // Every allowed class must have at least one candidate below it; the
      // adjectival route draws from annotations and does not count.
      bool nominal = std::any_of(slot.realizations.begin(), slot.realizations.end(),
                                 [](const FormalRealization& r) {
                                   return r.kind != RealizationKind::adjectival;
                                 });
      if (nominal) {
        for (const std::string& allowed : slot.allowed_classes) {
          bool any = false;
          for (const auto& [class_id, candidates] : slot.membership) {
            if (Lexicon::is_within(class_id, allowed) && !candidates.empty()) any = true;
          }
          if (!any) {
            add("empty-paradigm", slot_subject + "@" + allowed,
                "no candidates for class " + allowed + " in this slot");
          }
        }
      }
    }
  }

  // A class is reachable when some slot can select it: it is related by
  // ancestry to an allowed class of at least one slot.
  for (const OntologyClass& c : lexicon.ontology()) {
    bool reachable = false;
    for (const ArgumentSchema& s : lexicon.schemas()) {
      for (const ArgumentSlot& slot : s.slots) {
        for (const std::string& allowed : slot.allowed_classes) {
          if (class_related(c.id, allowed)) reachable = true;
        }
      }
    }
    if (!reachable) add("unreachable-class", c.id, "no slot can select this class");
  }

  for (const SentenceFrame& f : lexicon.frames()) {
    int verbs = 0;
    int hosts = 0;
    std::size_t verb_at = 0;
    std::size_t host_at = 0;
    for (std::size_t i = 0; i < f.pattern.size(); ++i) {
      if (f.pattern[i].function == ClauseFunction::verb) {
        ++verbs;
        verb_at = i;
      }
      if (f.pattern[i].np_host) {
        ++hosts;
        host_at = i;
      }
    }
    if (verbs != 1 || hosts != 1) {
      add("frame-invariant", f.id, "frame needs exactly one verb and exactly one NP host");
      continue;
    }
    VerbPosition actual = verb_at < host_at ? VerbPosition::before_np : VerbPosition::after_np;
    if (actual != f.verb_position) {
      add("frame-invariant", f.id, "declared verb position disagrees with the pattern");
    }
  }
  return report;
}

}  // namespace combi
