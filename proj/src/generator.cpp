#include "combi/generator.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>

#include "combi/constraints.hpp"
#include "combi/embedding.hpp"
#include "combi/error.hpp"
#include "combi/ontology.hpp"
#include "combi/random.hpp"

namespace combi {

namespace {

// Upper bound on the candidate pool drawn before the embedding filter ranks it.
constexpr std::size_t kFilterPool = 10000;
// Combination spaces up to this size are shuffled exhaustively.
constexpr std::uint64_t kShuffleLimit = 1u << 16;

struct Option {
  std::string lemma;
  std::string class_id;
  Number number = Number::singular;
  Determiner determiner = Determiner::none;
  std::optional<PairedFiller> paired;
};

struct SlotOptions {
  int slot = 0;
  std::vector<Option> options;
  bool paradigm_empty = false;  // no candidates at all for the class
};

std::string role_name(const Lexicon& lex, const std::string& role_id, Language language) {
  const SemanticRole* role = lex.role(role_id);
  if (!role) return role_id;
  if (auto it = role->gloss.find(language); it != role->gloss.end()) return it->second;
  if (auto it = role->gloss.find(Language::es); it != role->gloss.end()) return it->second;
  return role_id;
}

Determiner default_determiner(DeterminerPolicy policy, bool proper) {
  if (proper) return Determiner::none;
  switch (policy) {
    case DeterminerPolicy::required_indefinite:
      return Determiner::indefinite;
    case DeterminerPolicy::forbidden:
      return Determiner::none;
    default:
      return Determiner::definite;
  }
}

bool classes_related(std::string_view a, std::string_view b) {
  return Lexicon::is_within(a, b) || Lexicon::is_within(b, a);
}

AdjectivePosition adjectival_position(Language language) {
  return language == Language::de ? AdjectivePosition::prenominal : AdjectivePosition::postnominal;
}

bool head_number_conflict(const ArgumentSchema& schema, int slot, std::string_view class_id,
                          Number head) {
  return std::any_of(schema.class_head_number.begin(), schema.class_head_number.end(),
                     [&](const ClassHeadNumber& r) {
                       return r.slot == slot && Lexicon::is_within(class_id, r.class_id) && r.head != head;
                     });
}

std::optional<Number> required_number(const ArgumentSchema& schema, int slot, Number head) {
  for (const NumberCoRestriction& r : schema.co_restrictions) {
    if (r.slot == slot && r.head == head) return r.filler;
  }
  return std::nullopt;
}

bool applicable(const Lexicon& lex, const ArgumentSchema& schema, const ArgumentSlot& slot,
                const FormalRealization& r, std::string_view class_id) {
  if (!r.classes.empty() &&
      std::none_of(r.classes.begin(), r.classes.end(),
                   [&](const std::string& c) { return classes_related(c, class_id); })) {
    return false;
  }
  if (r.kind == RealizationKind::adjectival) {
    const AdjectiveAnnotation* a =
        lex.adjective_annotation(schema.language, schema.head_lemma, schema.sense_id,
                                 adjectival_position(schema.language));
    if (!a) return false;
    return std::any_of(a->items.begin(), a->items.end(), [&](const AnnotatedAdjective& item) {
      return item.slot == slot.index && !item.class_id.empty() &&
             Lexicon::is_within(item.class_id, class_id) && realization_hosts(r, item.class_id) &&
             lex.entry(schema.language, item.adjective);
    });
  }
  if (r.kind == RealizationKind::compound) {
    for (const ClassedCandidate& c : classed_members(lex, slot, class_id)) {
      const LexicalEntry* e = lex.entry(schema.language, c.candidate.lemma);
      if (e && !e->compound_form.empty() && realization_hosts(r, c.class_id)) return true;
    }
    return false;
  }
  return true;
}

SlotOptions slot_options(const Lexicon& lex, const ArgumentSchema& schema, Number head_number,
                         const SlotChoice& choice) {
  SlotOptions out;
  out.slot = choice.slot;
  const ArgumentSlot& slot = *schema.slot(choice.slot);
  const FormalRealization& r = slot.realizations[choice.realization];

  if (r.kind == RealizationKind::adjectival) {
    const AdjectiveAnnotation* a = lex.adjective_annotation(
        schema.language, schema.head_lemma, schema.sense_id, adjectival_position(schema.language));
    if (a) {
      std::set<std::string> seen;
      for (const AnnotatedAdjective& item : a->items) {
        if (item.slot != slot.index || item.class_id.empty()) continue;
        if (!Lexicon::is_within(item.class_id, choice.class_id) || !realization_hosts(r, item.class_id)) continue;
        if (!lex.entry(schema.language, item.adjective) || !seen.insert(item.adjective).second) continue;
        if (head_number_conflict(schema, slot.index, item.class_id, head_number)) continue;
        out.options.push_back({item.adjective, item.class_id, head_number, Determiner::none, std::nullopt});
      }
    }
    out.paradigm_empty = out.options.empty();
    return out;
  }

  std::vector<ClassedCandidate> pool = classed_members(lex, slot, choice.class_id);
  out.paradigm_empty = pool.empty();
  std::optional<Number> forced = required_number(schema, slot.index, head_number);

  auto numbers_for = [&](const LexicalEntry& e, NumberPolicy cand) {
    std::vector<Number> ns;
    for (Number n : kNumbers) {
      if (r.kind == RealizationKind::compound) {
        if (n == Number::singular) ns.push_back(n);
        continue;
      }
      if (!allows(r.filler_number_policy, n) || !allows(cand, n) || !e.has_number(n)) continue;
      if (forced && n != *forced) continue;
      ns.push_back(n);
    }
    return ns;
  };

  for (const ClassedCandidate& c : pool) {
    if (!realization_hosts(r, c.class_id)) continue;
    if (head_number_conflict(schema, slot.index, c.class_id, head_number)) continue;
    const LexicalEntry* e = lex.entry(schema.language, c.candidate.lemma);
    if (!e) continue;
    if (r.kind == RealizationKind::compound && e->compound_form.empty()) continue;
    Determiner det = (r.kind == RealizationKind::compound || r.kind == RealizationKind::apposition)
                         ? Determiner::none
                         : default_determiner(r.determiner_policy, e->proper);
    for (Number n : numbers_for(*e, c.candidate.number)) {
      if (needs_pair(slot, r, c.class_id)) {
        for (const ClassedCandidate& second : pool) {
          if (second.candidate.lemma == c.candidate.lemma && pool.size() > 1) continue;
          if (!realization_hosts(r, second.class_id) || !needs_pair(slot, r, second.class_id)) continue;
          const LexicalEntry* e2 = lex.entry(schema.language, second.candidate.lemma);
          if (!e2) continue;
          std::optional<Number> n2;
          for (Number m : kNumbers) {
            if (allows(second.candidate.number, m) && e2->has_number(m)) {
              n2 = m;
              break;
            }
          }
          if (!n2) continue;
          PairedFiller p{second.candidate.lemma, *n2,
                         default_determiner(slot.paired->determiner_policy, e2->proper)};
          out.options.push_back({c.candidate.lemma, c.class_id, n, det, p});
        }
      } else {
        out.options.push_back({c.candidate.lemma, c.class_id, n, det, std::nullopt});
      }
    }
  }
  return out;
}

std::vector<SlotOptions> all_options(const Lexicon& lex, const StructureTemplate& tmpl) {
  const ArgumentSchema& schema = require_schema(lex, tmpl.language, tmpl.noun, tmpl.sense_id);
  std::vector<SlotOptions> out;
  for (const SlotChoice& choice : tmpl.slots) {
    const ArgumentSlot* slot = schema.slot(choice.slot);
    if (!slot || choice.realization >= slot->realizations.size()) {
      throw NotFoundError("template " + tmpl.id + " does not match the schema");
    }
    out.push_back(slot_options(lex, schema, tmpl.head_number, choice));
  }
  return out;
}

std::vector<TraceItem> trace_for(const StructureTemplate& tmpl, const std::vector<SlotOptions>& opts,
                                 std::uint64_t combo) {
  std::vector<TraceItem> trace;
  trace.reserve(opts.size());
  std::vector<std::size_t> picks(opts.size());
  for (std::size_t i = opts.size(); i-- > 0;) {
    picks[i] = static_cast<std::size_t>(combo % opts[i].options.size());
    combo /= opts[i].options.size();
  }
  for (std::size_t i = 0; i < opts.size(); ++i) {
    const Option& o = opts[i].options[picks[i]];
    trace.push_back({tmpl.slots[i].slot, tmpl.slots[i].role, o.class_id, o.lemma, o.number,
                     o.determiner, o.paired});
  }
  return trace;
}

std::uint64_t product(const std::vector<SlotOptions>& opts) {
  std::uint64_t total = 1;
  for (const SlotOptions& s : opts) {
    std::uint64_t n = s.options.size();
    if (n == 0) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / n) return std::numeric_limits<std::uint64_t>::max();
    total *= n;
  }
  return total;
}

std::string template_id(Number head, const std::vector<SlotChoice>& slots) {
  std::vector<SlotChoice> by_index = slots;
  std::sort(by_index.begin(), by_index.end(),
            [](const SlotChoice& a, const SlotChoice& b) { return a.slot < b.slot; });
  std::string id = head == Number::singular ? "sg/" : "pl/";
  for (std::size_t i = 0; i < by_index.size(); ++i) {
    if (i) id += ",";
    id += std::to_string(by_index[i].slot) + ":" + std::to_string(by_index[i].realization);
  }
  return id;
}

}  // namespace

ClassSelection parse_selection(std::string_view text) {
  ClassSelection out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                               : comma - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    std::size_t colon = part.find_first_of(":=");
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == part.size()) {
      throw DomainError("malformed selection \"" + std::string(part) + "\"; expected slot:class");
    }
    std::string slot_text(part.substr(0, colon));
    if (slot_text.find_first_not_of("0123456789") != std::string::npos || slot_text.size() > 3) {
      throw DomainError("malformed slot index \"" + slot_text + "\"");
    }
    out[std::stoi(slot_text)] = std::string(part.substr(colon + 1));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_selection(const ClassSelection& selection) {
  std::string out;
  for (const auto& [slot, cls] : selection) {
    if (!out.empty()) out += ",";
    out += std::to_string(slot) + ":" + cls;
  }
  return out;
}

FilledPhrase to_filled(const StructureTemplate& tmpl, const std::vector<TraceItem>& trace) {
  FilledPhrase p;
  p.language = tmpl.language;
  p.noun = tmpl.noun;
  p.sense_id = tmpl.sense_id;
  p.head_number = tmpl.head_number;
  for (std::size_t i = 0; i < trace.size() && i < tmpl.slots.size(); ++i) {
    const TraceItem& t = trace[i];
    p.slots.push_back({t.slot, tmpl.slots[i].realization, t.class_id, t.lemma, t.number, t.determiner,
                       t.paired});
  }
  return p;
}

std::vector<StructureTemplate> enumerate_structures(const Lexicon& lex, Language language,
                                                    std::string_view noun, std::string_view sense_id,
                                                    const ClassSelection& selection) {
  const ArgumentSchema& schema = require_schema(lex, language, noun, sense_id);
  if (schema.slots.empty() || selection.empty()) return {};

  for (const auto& [index, class_id] : selection) {
    const ArgumentSlot* slot = schema.slot(index);
    if (!slot) {
      throw NotFoundError("noun \"" + std::string(noun) + "\" has no slot " + std::to_string(index));
    }
    require_class_allowed(lex, *slot, class_id);
  }
  for (const auto& [index, class_id] : selection) {
    const ArgumentSlot* slot = schema.slot(index);
    for (int required : slot->requires_slots) {
      if (!selection.count(required)) {
        const ArgumentSlot* other = schema.slot(required);
        std::string name = other ? role_name(lex, other->role, language) : std::to_string(required);
        throw DependencyError(required, "Arg" + std::to_string(index) + " (" +
                                            role_name(lex, slot->role, language) + ") requires Arg" +
                                            std::to_string(required) + " (" + name + ")");
      }
    }
  }

  // Selected slots in surface order, each with its applicable realizations.
  std::vector<int> order;
  for (int index : schema.order) {
    if (selection.count(index)) order.push_back(index);
  }
  std::vector<std::vector<std::size_t>> realizations;
  for (int index : order) {
    const ArgumentSlot& slot = *schema.slot(index);
    std::vector<std::size_t> usable;
    for (std::size_t r = 0; r < slot.realizations.size(); ++r) {
      if (applicable(lex, schema, slot, slot.realizations[r], selection.at(index))) usable.push_back(r);
    }
    if (usable.empty()) return {};
    realizations.push_back(std::move(usable));
  }

  const LexicalEntry* head = lex.entry(language, noun);
  std::vector<StructureTemplate> out;
  for (Number head_number : kNumbers) {
    if (!allows(schema.head_number_policy, head_number)) continue;
    if (head && !head->has_number(head_number)) continue;

    std::vector<std::size_t> pick(order.size(), 0);
    while (true) {
      std::vector<SlotChoice> choices;
      for (std::size_t i = 0; i < order.size(); ++i) {
        const ArgumentSlot& slot = *schema.slot(order[i]);
        choices.push_back({order[i], slot.role, selection.at(order[i]), realizations[i][pick[i]]});
      }

      bool valid = true;
      int compounds = 0;
      int leading = 0;
      bool closed = false;
      for (const SlotChoice& c : choices) {
        const FormalRealization& r = schema.slot(c.slot)->realizations[c.realization];
        bool phrasal = r.kind == RealizationKind::prepositional || r.kind == RealizationKind::genitive ||
                       (r.kind == RealizationKind::apposition && !r.filler_first);
        if (phrasal && closed) valid = false;
        if (phrasal && r.closing) closed = true;
        if (r.kind == RealizationKind::compound) ++compounds;
        if (r.kind == RealizationKind::apposition && r.filler_first) ++leading;
      }
      if (compounds > 1 || leading > 1) valid = false;

      StructureTemplate tmpl;
      if (valid) {
        tmpl.id = template_id(head_number, choices);
        tmpl.language = language;
        tmpl.noun = std::string(noun);
        tmpl.sense_id = std::string(sense_id);
        tmpl.head_number = head_number;
        tmpl.slots = choices;
        std::vector<SlotOptions> opts;
        for (const SlotChoice& c : choices) {
          opts.push_back(slot_options(lex, schema, head_number, c));
          if (opts.back().options.empty() && !opts.back().paradigm_empty) valid = false;
        }
        if (valid && product(opts) > 0) {
          std::vector<TraceItem> trace;
          for (std::size_t i = 0; i < choices.size(); ++i) {
            const SlotOptions& so = opts[i];
            const OntologyClass* cls = lex.ontology_class(choices[i].class_id);
            std::size_t chosen = 0;
            for (std::size_t k = 0; cls && k < so.options.size(); ++k) {
              if (so.options[k].lemma == cls->example_lemma) {
                chosen = k;
                break;
              }
            }
            const Option& o = so.options[chosen];
            trace.push_back({choices[i].slot, choices[i].role, o.class_id, o.lemma, o.number,
                             o.determiner, o.paired});
          }
          tmpl.standard_example = realize_np(lex, to_filled(tmpl, trace));
        }
      }
      if (valid) out.push_back(std::move(tmpl));

      std::size_t i = order.size();
      while (i > 0) {
        --i;
        if (++pick[i] < realizations[i].size()) break;
        pick[i] = 0;
        if (i == 0) {
          i = order.size() + 1;
          break;
        }
      }
      if (i == order.size() + 1 || order.empty()) break;
    }
  }
  return out;
}

StructureTemplate find_structure(const Lexicon& lex, Language language, std::string_view noun,
                                 std::string_view sense_id, const ClassSelection& selection,
                                 std::string_view template_id) {
  for (StructureTemplate& t : enumerate_structures(lex, language, noun, sense_id, selection)) {
    if (t.id == template_id) return std::move(t);
  }
  throw NotFoundError("no structure \"" + std::string(template_id) + "\" for this selection");
}

std::uint64_t combination_count(const Lexicon& lex, const StructureTemplate& tmpl) {
  return product(all_options(lex, tmpl));
}

std::vector<GeneratedPhrase> enumerate_phrases(const Lexicon& lex, const StructureTemplate& tmpl) {
  std::vector<SlotOptions> opts = all_options(lex, tmpl);
  std::uint64_t total = product(opts);
  std::vector<GeneratedPhrase> out;
  std::unordered_set<std::string> seen;
  for (std::uint64_t combo = 0; combo < total; ++combo) {
    GeneratedPhrase p;
    p.trace = trace_for(tmpl, opts, combo);
    p.surface = realize_np(lex, to_filled(tmpl, p.trace));
    if (seen.insert(p.surface).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<GeneratedPhrase> generate_phrases(const Lexicon& lex, const StructureTemplate& tmpl,
                                              const GenerateOptions& options) {
  if (options.limit == 0) return {};
  std::vector<SlotOptions> opts = all_options(lex, tmpl);
  for (const SlotOptions& s : opts) {
    if (s.options.empty()) {
      throw EmptyParadigmError(s.slot, "no candidates for Arg" + std::to_string(s.slot) +
                                           " in template " + tmpl.id);
    }
  }
  const std::uint64_t total = product(opts);
  const std::size_t target = options.filter ? std::max<std::size_t>(options.limit, kFilterPool)
                                            : options.limit;

  Rng rng(options.seed);
  std::vector<GeneratedPhrase> out;
  std::unordered_set<std::string> surfaces;
  auto emit = [&](std::uint64_t combo) {
    GeneratedPhrase p;
    p.trace = trace_for(tmpl, opts, combo);
    p.surface = realize_np(lex, to_filled(tmpl, p.trace));
    p.seed = options.seed;
    if (surfaces.insert(p.surface).second) out.push_back(std::move(p));
  };

  if (total <= kShuffleLimit) {
    // Without replacement: a seeded permutation of the whole space.
    std::vector<std::uint64_t> combos(total);
    for (std::uint64_t i = 0; i < total; ++i) combos[i] = i;
    rng.shuffle(combos);
    for (std::uint64_t combo : combos) {
      if (out.size() >= target) break;
      emit(combo);
    }
  } else {
    std::unordered_set<std::uint64_t> drawn;
    std::size_t attempts = 0;
    const std::size_t max_attempts = target * 50 + 1000;
    while (out.size() < target && attempts++ < max_attempts) {
      std::uint64_t combo = 0;
      for (const SlotOptions& s : opts) combo = combo * s.options.size() + rng.below(s.options.size());
      if (drawn.insert(combo).second) emit(combo);
    }
  }

  if (options.filter) {
    std::vector<GeneratedPhrase> filtered;
    for (ScoredPhrase& s : filter_phrases(*options.filter, tmpl.noun, out, options.limit)) {
      s.phrase.score = s.score;
      filtered.push_back(std::move(s.phrase));
    }
    return filtered;
  }
  return out;
}

}  // namespace combi
