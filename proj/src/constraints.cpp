#include "combi/constraints.hpp"

#include <algorithm>
#include <set>

namespace combi {

bool ConstraintResult::has(std::string_view rule_id) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule_id; });
}

std::optional<NumberPolicy> candidate_policy(const ArgumentSlot& slot, std::string_view class_id,
                                             std::string_view lemma) {
  for (const auto& [key, candidates] : slot.membership) {
    if (!Lexicon::is_within(key, class_id)) continue;
    for (const Candidate& c : candidates) {
      if (c.lemma == lemma) return c.number;
    }
  }
  return std::nullopt;
}

bool realization_hosts(const FormalRealization& r, std::string_view class_id) {
  if (r.classes.empty()) return true;
  return std::any_of(r.classes.begin(), r.classes.end(),
                     [&](const std::string& c) { return Lexicon::is_within(class_id, c); });
}

bool needs_pair(const ArgumentSlot& slot, const FormalRealization& r, std::string_view class_id) {
  if (!slot.paired || r.kind != RealizationKind::prepositional) return false;
  const std::vector<std::string>& classes = slot.paired->classes;
  return classes.empty() || std::any_of(classes.begin(), classes.end(), [&](const std::string& c) {
           return Lexicon::is_within(class_id, c);
         });
}

namespace {

bool phrasal(const FormalRealization& r) {
  switch (r.kind) {
    case RealizationKind::prepositional:
    case RealizationKind::genitive:
      return true;
    case RealizationKind::apposition:
      return !r.filler_first;
    default:
      return false;
  }
}

bool adjective_annotated(const Lexicon& lex, const ArgumentSchema& schema, int slot,
                         std::string_view class_id, std::string_view adjective) {
  AdjectivePosition position =
      schema.language == Language::de ? AdjectivePosition::prenominal : AdjectivePosition::postnominal;
  const AdjectiveAnnotation* a =
      lex.adjective_annotation(schema.language, schema.head_lemma, schema.sense_id, position);
  if (!a) return false;
  return std::any_of(a->items.begin(), a->items.end(), [&](const AnnotatedAdjective& item) {
    return item.adjective == adjective && item.slot == slot && !item.class_id.empty() &&
           Lexicon::is_within(item.class_id, class_id);
  });
}

std::string slot_label(const ArgumentSlot& slot) {
  return "Arg" + std::to_string(slot.index) + " (" + slot.role + ")";
}

}  // namespace

ConstraintResult check_constraints(const Lexicon& lex, const FilledPhrase& phrase) {
  ConstraintResult result;
  auto add = [&](const char* rule_id, int slot, std::string message) {
    result.violations.push_back({rule_id, slot, std::move(message)});
  };

  const ArgumentSchema* schema = lex.schema(phrase.language, phrase.noun, phrase.sense_id);
  if (!schema) {
    add(rule::kUnknownSchema, 0, "no schema for " + phrase.noun + "/" + phrase.sense_id);
    return result;
  }

  const LexicalEntry* head = lex.entry(phrase.language, phrase.noun);
  if (!allows(schema->head_number_policy, phrase.head_number) ||
      (head && !head->has_number(phrase.head_number))) {
    add(rule::kHeadNumber, 0,
        "head \"" + phrase.noun + "\" does not occur in the " +
            std::string(name_of(phrase.head_number)));
  }

  std::set<int> filled;
  std::size_t last_position = 0;
  bool have_phrasal = false;
  bool closed = false;
  int compounds = 0;

  for (const FilledSlot& f : phrase.slots) {
    const ArgumentSlot* slot = schema->slot(f.slot);
    if (!slot) {
      add(rule::kRealization, f.slot, "schema has no slot " + std::to_string(f.slot));
      continue;
    }
    if (!filled.insert(f.slot).second) {
      add(rule::kSlotOrder, f.slot, slot_label(*slot) + " is filled twice");
      continue;
    }
    if (f.realization >= slot->realizations.size()) {
      add(rule::kRealization, f.slot, slot_label(*slot) + " has no such realization");
      continue;
    }
    const FormalRealization& r = slot->realizations[f.realization];
    const LexicalEntry* filler = lex.entry(phrase.language, f.lemma);

    // Class membership, noun-specific.
    bool class_allowed = std::any_of(slot->allowed_classes.begin(), slot->allowed_classes.end(),
                                     [&](const std::string& a) { return Lexicon::is_within(f.class_id, a); });
    std::optional<NumberPolicy> cand;
    if (r.kind == RealizationKind::adjectival) {
      if (!class_allowed || !adjective_annotated(lex, *schema, f.slot, f.class_id, f.lemma)) {
        add(rule::kClassMembership, f.slot,
            "\"" + f.lemma + "\" is not an annotated adjective of class " + f.class_id + " for " +
                slot_label(*slot));
      }
    } else {
      cand = candidate_policy(*slot, f.class_id, f.lemma);
      if (!class_allowed || !cand) {
        add(rule::kClassMembership, f.slot,
            "\"" + f.lemma + "\" is not a candidate of class " + f.class_id + " for " +
                slot_label(*slot));
      }
    }

    if (!realization_hosts(r, f.class_id)) {
      add(rule::kRealization, f.slot,
          "this realization of " + slot_label(*slot) + " does not host class " + f.class_id);
    }
    if (r.kind == RealizationKind::compound) {
      ++compounds;
      if (!filler || filler->compound_form.empty()) {
        add(rule::kRealization, f.slot, "\"" + f.lemma + "\" has no compound form");
      }
    }

    // Determiners.
    if (r.kind != RealizationKind::adjectival && r.kind != RealizationKind::compound) {
      if (filler && filler->proper) {
        if (f.determiner != Determiner::none) {
          add(rule::kDeterminerPolicy, f.slot, "proper noun \"" + f.lemma + "\" takes no determiner");
        }
      } else if (!allows(r.determiner_policy, f.determiner)) {
        add(rule::kDeterminerPolicy, f.slot,
            slot_label(*slot) + " requires determiner policy " +
                std::string(name_of(r.determiner_policy)) + ", found " +
                std::string(name_of(f.determiner)));
      }
    }

    // Numbers.
    if (r.kind != RealizationKind::adjectival && r.kind != RealizationKind::compound) {
      if (!allows(r.filler_number_policy, f.number)) {
        add(rule::kFillerNumber, f.slot,
            slot_label(*slot) + " requires a " + std::string(name_of(r.filler_number_policy)) +
                " filler");
      }
      if (cand && !allows(*cand, f.number)) {
        add(rule::kCandidateNumber, f.slot,
            "\"" + f.lemma + "\" occurs only in the " + std::string(name_of(*cand)) + " in " +
                slot_label(*slot));
      }
    }

    // Paired realization.
    if (needs_pair(*slot, r, f.class_id)) {
      if (!f.paired) {
        add(rule::kPairedRealization, f.slot,
            slot_label(*slot) + " needs the second endpoint \"" + slot->paired->preposition + "\"");
      } else {
        const LexicalEntry* second = lex.entry(phrase.language, f.paired->lemma);
        bool member = candidate_policy(*slot, f.class_id, f.paired->lemma).has_value() ||
                      std::any_of(slot->allowed_classes.begin(), slot->allowed_classes.end(),
                                  [&](const std::string& a) {
                                    return candidate_policy(*slot, a, f.paired->lemma).has_value();
                                  });
        if (!member) {
          add(rule::kClassMembership, f.slot,
              "\"" + f.paired->lemma + "\" is not a candidate for " + slot_label(*slot));
        }
        bool proper = second && second->proper;
        if ((proper && f.paired->determiner != Determiner::none) ||
            (!proper && !allows(slot->paired->determiner_policy, f.paired->determiner))) {
          add(rule::kDeterminerPolicy, f.slot, "second endpoint of " + slot_label(*slot) +
                                                   " violates its determiner policy");
        }
      }
    } else if (f.paired) {
      add(rule::kPairedRealization, f.slot, slot_label(*slot) + " takes no second endpoint");
    }

    // Surface order among phrasal complements.
    if (phrasal(r)) {
      std::size_t position = schema->position_of(f.slot);
      if (closed) {
        add(rule::kSlotOrder, f.slot,
            slot_label(*slot) + " cannot follow a complement that closes the phrase");
      } else if (have_phrasal && position < last_position) {
        add(rule::kSlotOrder, f.slot, slot_label(*slot) + " is out of schema order");
      }
      have_phrasal = true;
      last_position = std::max(last_position, position);
      closed = closed || r.closing;
    }
  }

  if (compounds > 1) add(rule::kRealization, 0, "at most one compound element");

  for (const FilledSlot& f : phrase.slots) {
    const ArgumentSlot* slot = schema->slot(f.slot);
    if (!slot) continue;
    for (int required : slot->requires_slots) {
      if (!filled.count(required)) {
        const ArgumentSlot* other = schema->slot(required);
        const SemanticRole* role = other ? lex.role(other->role) : nullptr;
        std::string name = role && role->gloss.count(Language::es) ? role->gloss.at(Language::es)
                                                                   : std::to_string(required);
        add(rule::kSlotInterdependence, f.slot,
            slot_label(*slot) + " requires Arg" + std::to_string(required) + " (" + name + ")");
      }
    }
  }

  for (const NumberCoRestriction& rule_ : schema->co_restrictions) {
    if (rule_.head != phrase.head_number) continue;
    for (const FilledSlot& f : phrase.slots) {
      if (f.slot == rule_.slot && f.number != rule_.filler) {
        add(rule::kNumberCoRestriction, f.slot,
            "a " + std::string(name_of(rule_.head)) + " head requires a " +
                std::string(name_of(rule_.filler)) + " Arg" + std::to_string(f.slot));
      }
    }
  }

  for (const ClassHeadNumber& rule_ : schema->class_head_number) {
    for (const FilledSlot& f : phrase.slots) {
      if (f.slot == rule_.slot && Lexicon::is_within(f.class_id, rule_.class_id) &&
          phrase.head_number != rule_.head) {
        add(rule::kClassHeadNumber, f.slot,
            "with Arg" + std::to_string(f.slot) + " of class " + rule_.class_id + " the head is " +
                std::string(name_of(rule_.head)));
      }
    }
  }

  return result;
}

}  // namespace combi
