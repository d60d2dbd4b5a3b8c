#include "combi/validator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "combi/error.hpp"
#include "combi/frames.hpp"
#include "combi/text.hpp"

namespace combi {

std::string_view verdict_name(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::accepted:
      return "accepted";
    case VerdictStatus::rejected:
      return "rejected";
    case VerdictStatus::unknown_head:
      return "unknown-head";
  }
  return "";
}

namespace {

struct Contraction {
  const char* word;
  const char* first;
  const char* second;
};

constexpr Contraction kSpanish[] = {{"del", "de", "el"}, {"al", "a", "el"}};
constexpr Contraction kFrench[] = {
    {"du", "de", "le"}, {"des", "de", "les"}, {"au", "à", "le"}, {"aux", "à", "les"}};
constexpr Contraction kGerman[] = {{"vom", "von", "dem"}, {"im", "in", "dem"},  {"am", "an", "dem"},
                                   {"zum", "zu", "dem"},  {"zur", "zu", "der"}, {"beim", "bei", "dem"},
                                   {"ins", "in", "das"},  {"ans", "an", "das"}};

// After one of these, French "des" is the indefinite plural, not de + les.
const std::set<std::string> kFrenchPrepositions = {"à",   "de",   "par",  "sur",  "pour",   "avec", "en",
                                                   "dans", "sans", "vers", "chez", "contre", "entre"};

std::span<const Contraction> contractions(Language language) {
  switch (language) {
    case Language::es:
      return kSpanish;
    case Language::fr:
      return kFrench;
    case Language::de:
      return kGerman;
  }
  return {};
}

std::string lower(std::string_view s) { return text::to_lower(s); }

}  // namespace

std::vector<std::string> normalize_tokens(Language language, std::string_view input) {
  std::string s = text::nfc(input);
  std::string cleaned;
  cleaned.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '{' || s[i] == '}' || s[i] == '*') continue;
    // U+2019 RIGHT SINGLE QUOTATION MARK as apostrophe
    if (s.compare(i, 3, "\xE2\x80\x99") == 0) {
      cleaned += '\'';
      i += 2;
      continue;
    }
    cleaned += s[i];
  }
  while (!cleaned.empty() && (cleaned.back() == '.' || cleaned.back() == ' ' || cleaned.back() == '\n')) {
    cleaned.pop_back();
  }

  std::vector<std::string> words;
  for (const std::string& w : text::split_words(cleaned)) {
    std::string word = lower(w);
    if (language == Language::fr) {
      std::size_t apo = word.find('\'');
      if (apo != std::string::npos && apo + 1 < word.size()) {
        std::string first = word.substr(0, apo + 1);
        words.push_back(first == "d'" ? "de" : first);
        words.push_back(word.substr(apo + 1));
        continue;
      }
      if (word == "d'") word = "de";
    }
    words.push_back(std::move(word));
  }

  std::vector<std::string> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i];
    bool expanded = false;
    if (i > 0) {
      for (const Contraction& c : contractions(language)) {
        if (w != c.word) continue;
        if (language == Language::fr && w == "des" && kFrenchPrepositions.count(out.back())) break;
        out.push_back(c.first);
        out.push_back(c.second);
        expanded = true;
        break;
      }
    }
    if (!expanded) out.push_back(w);
  }
  return out;
}

struct PhraseMatcher::Index {
  struct PerLanguage {
    std::unordered_map<std::string, std::vector<const LexicalEntry*>> nouns;
    std::unordered_map<std::string, std::vector<const LexicalEntry*>> adjectives;
    std::vector<const LexicalEntry*> compounds;
    std::set<std::string> determiners;
    std::set<std::string> prepositions;
    std::set<std::string> heads;  // lowercase head forms of nouns with schemas
  };
  std::map<Language, PerLanguage> languages;
  std::size_t max_words = 1;

  const PerLanguage& of(Language language) const {
    static const PerLanguage empty;
    auto it = languages.find(language);
    return it == languages.end() ? empty : it->second;
  }
};

namespace {

using Index = PhraseMatcher::Index;

struct NominalMatch {
  const LexicalEntry* entry = nullptr;
  Number number = Number::singular;
  Determiner determiner = Determiner::none;
  std::size_t end = 0;
};

struct Reading {
  const ArgumentSchema* schema = nullptr;
  std::size_t schema_index = 0;
  Number head_number = Number::singular;
  Determiner head_determiner = Determiner::none;
  Span head_span;
  std::vector<HeadAdjective> head_adjectives;
  std::vector<FilledSlot> slots;
  std::vector<Span> slot_spans;
  std::vector<Chunk> chunks;
  int modifiers = 0;
  ConstraintResult result;
  int membership_violations = 0;
};

class Parser {
 public:
  Parser(const Lexicon& lex, const Index& index, Language language, std::vector<std::string> tokens)
      : lex_(lex), ix_(index.of(language)), max_words_(index.max_words), lang_(language),
        t_(std::move(tokens)) {}

  std::vector<Reading> readings;
  std::size_t furthest = 0;

  void run(const ArgumentSchema& schema, std::size_t schema_index) {
    head_ = lex_.entry(lang_, schema.head_lemma);
    if (!head_ || t_.empty()) return;
    Reading st;
    st.schema = &schema;
    st.schema_index = schema_index;
    schema_ = &schema;

    after_leading(st, 0, true);

    for (const ArgumentSlot& slot : schema.slots) {
      for (std::size_t r = 0; r < slot.realizations.size(); ++r) {
        const FormalRealization& real = slot.realizations[r];
        if (real.kind != RealizationKind::apposition || !real.filler_first) continue;
        for (const NominalMatch& m : nominal(0, Case::nominative)) {
          for (const std::string& key : keys(slot, real, m.entry->lemma)) {
            Reading next = st;
            fill(next, slot, r, key, m, {0, m.end});
            after_leading(next, m.end, false);
          }
        }
      }
    }
  }

 private:
  const Lexicon& lex_;
  const Index::PerLanguage& ix_;
  std::size_t max_words_;
  Language lang_;
  std::vector<std::string> t_;
  const LexicalEntry* head_ = nullptr;
  const ArgumentSchema* schema_ = nullptr;

  void reach(std::size_t pos) { furthest = std::max(furthest, pos); }

  bool is_determiner(const std::string& w) const { return ix_.determiners.count(w) > 0; }

  bool det_matches(const std::string& token, Determiner det, const LexicalEntry& e, Number n, Case c,
                   bool stressed_a) const {
    std::string expected = determiner_form(lang_, det, e.gender, n, c, stressed_a);
    if (expected.empty()) return false;
    if (token == expected) return true;
    return token == "l'" && (expected == "le" || expected == "la");
  }

  std::vector<NominalMatch> nominal(std::size_t pos, Case c) const {
    std::vector<NominalMatch> out;
    for (std::size_t len = std::min(max_words_, t_.size() - std::min(pos, t_.size())); len >= 1; --len) {
      std::vector<std::string> words(t_.begin() + pos, t_.begin() + pos + len);
      std::string s = text::join(words, " ");
      auto it = ix_.nouns.find(s);
      if (it == ix_.nouns.end()) continue;
      for (const LexicalEntry* e : it->second) {
        for (Number n : kNumbers) {
          auto f = e->form(n, c);
          if (f && lower(*f) == s) out.push_back({e, n, Determiner::none, pos + len});
        }
      }
    }
    return out;
  }

  std::vector<NominalMatch> det_nominal(std::size_t pos, Case c) const {
    std::vector<NominalMatch> out;
    if (pos >= t_.size()) return out;
    out = nominal(pos, c);
    if (is_determiner(t_[pos])) {
      for (NominalMatch m : nominal(pos + 1, c)) {
        if (m.entry->proper) continue;
        for (Determiner d : {Determiner::definite, Determiner::indefinite}) {
          if (det_matches(t_[pos], d, *m.entry, m.number, c, m.entry->stressed_a)) {
            m.determiner = d;
            out.push_back(m);
            break;
          }
        }
      }
    }
    return out;
  }

  // Membership classes of the slot listing `lemma`, those the realization hosts
  // first; a single empty id when the lemma is no member at all.
  std::vector<std::string> keys(const ArgumentSlot& slot, const FormalRealization& r,
                                const std::string& lemma) const {
    std::vector<std::string> hosted;
    std::vector<std::string> other;
    for (const auto& [key, candidates] : slot.membership) {
      bool listed = std::any_of(candidates.begin(), candidates.end(),
                                [&](const Candidate& c) { return c.lemma == lemma; });
      if (!listed) continue;
      (realization_hosts(r, key) ? hosted : other).push_back(key);
    }
    if (!hosted.empty()) return hosted;
    if (!other.empty()) return other;
    return {""};
  }

  static bool filled(const Reading& st, int slot) {
    return std::any_of(st.slots.begin(), st.slots.end(), [&](const FilledSlot& f) { return f.slot == slot; });
  }

  void fill(Reading& st, const ArgumentSlot& slot, std::size_t r, const std::string& key,
            const NominalMatch& m, Span span) const {
    FilledSlot f;
    f.slot = slot.index;
    f.realization = r;
    f.class_id = key;
    f.lemma = m.entry->lemma;
    f.number = m.number;
    f.determiner = m.determiner;
    st.slots.push_back(f);
    st.slot_spans.push_back(span);
    const FormalRealization& real = slot.realizations[r];
    if (real.kind == RealizationKind::prepositional || real.kind == RealizationKind::genitive ||
        real.kind == RealizationKind::apposition) {
      st.chunks.push_back({real.kind, real.preposition, m.determiner, m.entry->lemma, m.number,
                           ChunkRole::filler, slot.index, span});
    }
  }

  void after_leading(const Reading& st, std::size_t p, bool allow_det) {
    reach(p);
    if (allow_det && p < t_.size() && is_determiner(t_[p])) adjectives_then_head(st, p + 1, p);
    adjectives_then_head(st, p, std::string::npos);
  }

  void adjectives_then_head(const Reading& st, std::size_t p, std::size_t det_pos) {
    reach(p);
    std::size_t q = p;
    while (q < t_.size() && ix_.adjectives.count(t_[q])) ++q;
    for (std::size_t h = p; h <= q && h < t_.size(); ++h) try_head(st, det_pos, p, h);
  }

  void try_head(const Reading& st, std::size_t det_pos, std::size_t adj_begin, std::size_t h) {
    const std::string& w = t_[h];
    for (Number n : kNumbers) {
      auto form = head_->form(n, Case::nominative);
      if (!form) continue;
      std::string hf = lower(*form);
      if (w == hf) {
        head_match(st, det_pos, adj_begin, h, n);
      } else if (w.size() > hf.size() && w.compare(w.size() - hf.size(), hf.size(), hf) == 0) {
        std::string prefix = w.substr(0, w.size() - hf.size());
        for (const LexicalEntry* e : ix_.compounds) {
          if (lower(e->compound_form) != prefix) continue;
          for (const ArgumentSlot& slot : schema_->slots) {
            if (filled(st, slot.index)) continue;
            for (std::size_t r = 0; r < slot.realizations.size(); ++r) {
              if (slot.realizations[r].kind != RealizationKind::compound) continue;
              for (const std::string& key : keys(slot, slot.realizations[r], e->lemma)) {
                Reading next = st;
                fill(next, slot, r, key, {e, Number::singular, Determiner::none, h + 1}, {h, h + 1});
                head_match(next, det_pos, adj_begin, h, n);
              }
            }
          }
        }
      }
    }
  }

  void head_match(Reading st, std::size_t det_pos, std::size_t adj_begin, std::size_t h, Number n) {
    st.head_number = n;
    st.head_span = {h, h + 1};
    st.head_determiner = Determiner::none;
    if (det_pos != std::string::npos) {
      bool stressed = head_->stressed_a && adj_begin == h;
      if (det_matches(t_[det_pos], Determiner::definite, *head_, n, Case::nominative, stressed)) {
        st.head_determiner = Determiner::definite;
      } else if (det_matches(t_[det_pos], Determiner::indefinite, *head_, n, Case::nominative, stressed)) {
        st.head_determiner = Determiner::indefinite;
      } else {
        return;
      }
      st.head_span.begin = det_pos;
    } else if (adj_begin < h) {
      st.head_span.begin = adj_begin;
    }
    reach(h + 1);
    std::vector<std::size_t> pre;
    for (std::size_t i = adj_begin; i < h; ++i) pre.push_back(i);
    adjectives(st, pre, 0, true, [&](const Reading& after_pre) { postnominal(after_pre, h + 1); });
  }

  void postnominal(const Reading& st, std::size_t p) {
    if (lang_ == Language::de) {
      chunks(st, p);
      return;
    }
    std::size_t q = p;
    while (q < t_.size() && ix_.adjectives.count(t_[q])) ++q;
    for (std::size_t k = p; k <= q; ++k) {
      std::vector<std::size_t> post;
      for (std::size_t i = p; i < k; ++i) post.push_back(i);
      adjectives(st, post, 0, false, [&](const Reading& done) { chunks(done, k); });
    }
  }

  // Each adjective is either a head modifier or, when annotated with a slot,
  // the adjectival realization of that slot.
  void adjectives(const Reading& st, const std::vector<std::size_t>& positions, std::size_t i,
                  bool prenominal, const std::function<void(const Reading&)>& next) {
    if (i == positions.size()) {
      next(st);
      return;
    }
    const std::string& w = t_[positions[i]];
    auto it = ix_.adjectives.find(w);
    if (it == ix_.adjectives.end()) return;
    bool slot_side = prenominal == (lang_ == Language::de);
    AdjectivePosition position = prenominal ? AdjectivePosition::prenominal : AdjectivePosition::postnominal;
    const AdjectiveAnnotation* ann =
        lex_.adjective_annotation(lang_, schema_->head_lemma, schema_->sense_id, position);
    for (const LexicalEntry* e : it->second) {
      std::string expected;
      try {
        expected = lower(adjective_form(lex_, lang_, e->lemma, head_->gender, st.head_number, Case::nominative));
      } catch (const Error&) {
        continue;
      }
      if (expected != w) continue;
      Reading as_modifier = st;
      as_modifier.head_adjectives.push_back({e->lemma, prenominal});
      adjectives(as_modifier, positions, i + 1, prenominal, next);

      if (!slot_side || !ann) continue;
      std::set<std::pair<int, std::string>> seen;
      for (const AnnotatedAdjective& item : ann->items) {
        if (item.adjective != e->lemma || !item.slot || item.class_id.empty()) continue;
        if (!seen.insert({*item.slot, item.class_id}).second) continue;
        const ArgumentSlot* slot = schema_->slot(*item.slot);
        if (!slot || filled(st, slot->index)) continue;
        for (std::size_t r = 0; r < slot->realizations.size(); ++r) {
          if (slot->realizations[r].kind != RealizationKind::adjectival) continue;
          Reading as_slot = st;
          FilledSlot f;
          f.slot = slot->index;
          f.realization = r;
          f.class_id = item.class_id;
          f.lemma = e->lemma;
          f.number = st.head_number;
          as_slot.slots.push_back(f);
          as_slot.slot_spans.push_back({positions[i], positions[i] + 1});
          adjectives(as_slot, positions, i + 1, prenominal, next);
        }
      }
    }
  }

  void chunks(const Reading& st, std::size_t pos) {
    reach(pos);
    if (pos == t_.size()) {
      finish(st);
      return;
    }
    const std::string& w = t_[pos];
    for (const ArgumentSlot& slot : schema_->slots) {
      if (filled(st, slot.index)) continue;
      for (std::size_t r = 0; r < slot.realizations.size(); ++r) {
        const FormalRealization& real = slot.realizations[r];
        switch (real.kind) {
          case RealizationKind::prepositional: {
            if (lower(real.preposition) != w) break;
            Case c = real.case_government.value_or(Case::nominative);
            for (const NominalMatch& m : det_nominal(pos + 1, c)) {
              for (const std::string& key : keys(slot, real, m.entry->lemma)) {
                Reading next = st;
                fill(next, slot, r, key, m, {pos, m.end});
                if (slot.paired) paired(next, slot, m.end);
                chunks(next, m.end);
              }
            }
            break;
          }
          case RealizationKind::genitive:
            for (const NominalMatch& m : det_nominal(pos, Case::genitive)) {
              for (const std::string& key : keys(slot, real, m.entry->lemma)) {
                Reading next = st;
                fill(next, slot, r, key, m, {pos, m.end});
                chunks(next, m.end);
              }
            }
            break;
          case RealizationKind::apposition:
            if (real.filler_first) break;
            for (const NominalMatch& m : nominal(pos, real.case_government.value_or(Case::nominative))) {
              for (const std::string& key : keys(slot, real, m.entry->lemma)) {
                Reading next = st;
                fill(next, slot, r, key, m, {pos, m.end});
                chunks(next, m.end);
              }
            }
            break;
          default:
            break;
        }
      }
    }

    // A complement of the previous filler rather than of the head.
    if (st.chunks.empty()) return;
    const std::string modifier_prep = lang_ == Language::de ? "von" : "de";
    std::vector<NominalMatch> mods;
    if (w == modifier_prep) {
      for (NominalMatch m : det_nominal(pos + 1, lang_ == Language::de ? Case::dative : Case::nominative)) {
        mods.push_back(m);
      }
    }
    if (lang_ == Language::de) {
      for (const NominalMatch& m : det_nominal(pos, Case::genitive)) {
        if (m.determiner != Determiner::none) mods.push_back(m);
      }
    }
    for (const NominalMatch& m : mods) {
      Reading next = st;
      bool prep = w == modifier_prep && m.end > pos + 1 && t_[pos] == modifier_prep;
      next.chunks.push_back({prep ? RealizationKind::prepositional : RealizationKind::genitive,
                             prep ? modifier_prep : "", m.determiner, m.entry->lemma, m.number,
                             ChunkRole::modifier, 0, {pos, m.end}});
      ++next.modifiers;
      chunks(next, m.end);
    }
  }

  void paired(const Reading& st, const ArgumentSlot& slot, std::size_t pos) {
    if (pos >= t_.size() || lower(slot.paired->preposition) != t_[pos]) return;
    Case c = slot.paired->case_government.value_or(Case::nominative);
    for (const NominalMatch& m : det_nominal(pos + 1, c)) {
      Reading next = st;
      FilledSlot& f = next.slots.back();
      f.paired = PairedFiller{m.entry->lemma, m.number, m.determiner};
      next.slot_spans.back().end = m.end;
      next.chunks.back().span.end = m.end;
      next.chunks.push_back({RealizationKind::prepositional, slot.paired->preposition, m.determiner,
                             m.entry->lemma, m.number, ChunkRole::paired, slot.index, {pos, m.end}});
      chunks(next, m.end);
    }
  }

  void finish(Reading st) {
    FilledPhrase fp;
    fp.language = lang_;
    fp.noun = schema_->head_lemma;
    fp.sense_id = schema_->sense_id;
    fp.head_number = st.head_number;
    fp.head_determiner = st.head_determiner;
    fp.head_adjectives = st.head_adjectives;
    fp.slots = st.slots;
    st.result = check_constraints(lex_, fp);
    for (const Violation& v : st.result.violations) {
      if (v.rule == rule::kClassMembership) ++st.membership_violations;
    }
    readings.push_back(std::move(st));
  }
};

std::string template_id_of(const Reading& r) {
  std::vector<std::pair<int, std::size_t>> parts;
  for (const FilledSlot& f : r.slots) parts.emplace_back(f.slot, f.realization);
  std::sort(parts.begin(), parts.end());
  std::string id = r.head_number == Number::singular ? "sg/" : "pl/";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) id += ",";
    id += std::to_string(parts[i].first) + ":" + std::to_string(parts[i].second);
  }
  return id;
}

auto rank_key(const Reading& r) {
  return std::make_tuple(r.membership_violations, r.result.violations.size(),
                         -static_cast<long>(r.slots.size()), r.modifiers, r.schema_index);
}

std::vector<TraceItem> trace_of(const Reading& r) {
  std::vector<TraceItem> trace;
  for (const FilledSlot& f : r.slots) {
    const ArgumentSlot* slot = r.schema->slot(f.slot);
    trace.push_back({f.slot, slot ? slot->role : "", f.class_id, f.lemma, f.number, f.determiner, f.paired});
  }
  std::stable_sort(trace.begin(), trace.end(), [&](const TraceItem& a, const TraceItem& b) {
    return r.schema->position_of(a.slot) < r.schema->position_of(b.slot);
  });
  return trace;
}

std::string describe(const Reading& r) {
  std::string out;
  for (const FilledSlot& f : r.slots) {
    if (!out.empty()) out += ", ";
    out += "Arg" + std::to_string(f.slot) + "=" + f.lemma;
  }
  return out.empty() ? "no argument filled" : out;
}

std::string span_text(const std::vector<std::string>& tokens, Span s) {
  std::vector<std::string> words(tokens.begin() + s.begin, tokens.begin() + s.end);
  return text::join(words, " ");
}

ParsedNP parsed_of(const Reading& r, const std::vector<std::string>& tokens) {
  ParsedNP p;
  p.head = r.schema->head_lemma;
  p.head_number = r.head_number;
  p.head_determiner = r.head_determiner;
  for (const HeadAdjective& a : r.head_adjectives) p.head_adjectives.push_back(a.lemma);
  p.chunks = r.chunks;
  std::sort(p.chunks.begin(), p.chunks.end(),
            [](const Chunk& a, const Chunk& b) { return a.span.begin < b.span.begin; });
  p.tokens = tokens;
  return p;
}

}  // namespace

PhraseMatcher::PhraseMatcher(const Lexicon& lex) : lex_(&lex), index_(std::make_unique<Index>()) {
  for (const LexicalEntry& e : lex.entries()) {
    Index::PerLanguage& ix = index_->languages[e.language];
    for (const auto& [key, form] : e.forms) {
      if (!form) continue;
      std::string f = lower(*form);
      index_->max_words = std::max(index_->max_words, text::split_words(f).size());
      auto& bucket = e.pos == PartOfSpeech::noun ? ix.nouns[f] : ix.adjectives[f];
      if (std::find(bucket.begin(), bucket.end(), &e) == bucket.end()) bucket.push_back(&e);
    }
    if (!e.compound_form.empty()) ix.compounds.push_back(&e);
  }
  for (Language language : {Language::es, Language::fr, Language::de}) {
    Index::PerLanguage& ix = index_->languages[language];
    for (Determiner d : {Determiner::definite, Determiner::indefinite}) {
      for (Gender g : {Gender::masculine, Gender::feminine, Gender::neuter}) {
        for (Number n : kNumbers) {
          for (Case c : {Case::nominative, Case::accusative, Case::dative, Case::genitive}) {
            for (bool stressed : {false, true}) {
              std::string form = determiner_form(language, d, g, n, c, stressed);
              if (!form.empty()) ix.determiners.insert(form);
            }
          }
        }
      }
    }
    if (language == Language::fr) ix.determiners.insert("l'");
  }
  for (const ArgumentSchema& s : lex.schemas()) {
    Index::PerLanguage& ix = index_->languages[s.language];
    if (const LexicalEntry* head = lex.entry(s.language, s.head_lemma)) {
      for (Number n : kNumbers) {
        if (auto f = head->form(n)) ix.heads.insert(lower(*f));
      }
    }
    for (const ArgumentSlot& slot : s.slots) {
      for (const FormalRealization& r : slot.realizations) {
        if (!r.preposition.empty()) ix.prepositions.insert(lower(r.preposition));
      }
      if (slot.paired) ix.prepositions.insert(lower(slot.paired->preposition));
    }
  }
}

PhraseMatcher::~PhraseMatcher() = default;
PhraseMatcher::PhraseMatcher(PhraseMatcher&&) noexcept = default;
PhraseMatcher& PhraseMatcher::operator=(PhraseMatcher&&) noexcept = default;

namespace {

bool head_present(const Index::PerLanguage& ix, const std::vector<std::string>& tokens) {
  for (const std::string& w : tokens) {
    for (const std::string& h : ix.heads) {
      if (w == h) return true;
      if (w.size() > h.size() && w.compare(w.size() - h.size(), h.size(), h) == 0) {
        std::string prefix = w.substr(0, w.size() - h.size());
        for (const LexicalEntry* e : ix.compounds) {
          if (lower(e->compound_form) == prefix) return true;
        }
      }
    }
  }
  return false;
}

struct ParseOutcome {
  std::vector<Reading> readings;
  std::size_t furthest = 0;
};

ParseOutcome parse_all(const Lexicon& lex, const Index& index, Language language,
                       const std::vector<std::string>& tokens) {
  Parser parser(lex, index, language, tokens);
  std::size_t i = 0;
  for (const ArgumentSchema& s : lex.schemas()) {
    if (s.language == language) parser.run(s, i);
    ++i;
  }
  return {std::move(parser.readings), parser.furthest};
}

Verdict verdict_from(const Index::PerLanguage& ix, const std::vector<std::string>& tokens,
                     ParseOutcome outcome) {
  Verdict v;
  if (tokens.empty() || !head_present(ix, tokens)) {
    v.status = VerdictStatus::unknown_head;
    v.diagnoses.push_back({"unknown-head", "no known head noun in the phrase", {0, tokens.size()}});
    return v;
  }
  if (outcome.readings.empty()) {
    v.status = VerdictStatus::rejected;
    std::size_t at = std::min(outcome.furthest, tokens.size() - 1);
    const std::string& w = tokens[at];
    bool known = ix.nouns.count(w) || ix.adjectives.count(w) || ix.determiners.count(w) ||
                 ix.prepositions.count(w);
    if (known) {
      v.diagnoses.push_back({rule::kNoSlotMatch, "\"" + w + "\" does not attach to any slot", {at, at + 1}});
    } else {
      v.diagnoses.push_back({rule::kUnknownToken, "unknown token \"" + w + "\"", {at, at + 1}});
    }
    return v;
  }

  std::vector<Reading>& rs = outcome.readings;
  std::stable_sort(rs.begin(), rs.end(),
                   [](const Reading& a, const Reading& b) { return rank_key(a) < rank_key(b); });
  const Reading& best = rs.front();
  v.status = best.result.ok() ? VerdictStatus::accepted : VerdictStatus::rejected;
  v.sense_id = best.schema->sense_id;
  v.template_id = template_id_of(best);
  v.trace = trace_of(best);
  v.parse = parsed_of(best, tokens);
  for (const Violation& viol : best.result.violations) {
    Span span = best.head_span;
    for (std::size_t k = 0; k < best.slots.size(); ++k) {
      if (best.slots[k].slot == viol.slot) span = best.slot_spans[k];
    }
    v.diagnoses.push_back({viol.rule, viol.message, span});
  }

  for (const Chunk& c : best.chunks) {
    if (c.role != ChunkRole::modifier) continue;
    const Chunk* host = nullptr;
    for (const Chunk& other : best.chunks) {
      if (other.span.end == c.span.begin) host = &other;
    }
    std::string note = "\"" + span_text(tokens, c.span) + "\" modifies ";
    note += host ? "\"" + host->lemma + "\"" : "the preceding complement";
    note += ", not the head \"" + best.schema->head_lemma + "\"";
    v.notes.push_back(note);
  }
  std::set<std::string> described{describe(best)};
  for (std::size_t k = 1; k < rs.size() && v.notes.size() < 4; ++k) {
    if (rs[k].result.violations.size() != best.result.violations.size()) continue;
    std::string d = describe(rs[k]);
    if (!described.insert(d).second) continue;
    v.notes.push_back("alternative reading (" + rs[k].schema->sense_id + "): " + d);
  }
  return v;
}

}  // namespace

Verdict PhraseMatcher::validate(Language language, std::string_view text) const {
  std::vector<std::string> tokens = normalize_tokens(language, text);
  return verdict_from(index_->of(language), tokens, parse_all(*lex_, *index_, language, tokens));
}

std::optional<ParsedNP> PhraseMatcher::parse(Language language, std::string_view text) const {
  Verdict v = validate(language, text);
  return v.parse;
}

Verdict PhraseMatcher::validate_sentence(Language language, std::string_view text) const {
  const Index::PerLanguage& ix = index_->of(language);
  std::vector<std::string> tokens = normalize_tokens(language, text);

  // Leftmost, then longest, span that parses as a noun phrase.
  for (std::size_t b = 0; b < tokens.size(); ++b) {
    for (std::size_t e = tokens.size(); e > b; --e) {
      std::vector<std::string> sub(tokens.begin() + b, tokens.begin() + e);
      if (!head_present(ix, sub)) continue;
      ParseOutcome outcome = parse_all(*lex_, *index_, language, sub);
      if (outcome.readings.empty()) continue;
      Verdict v = verdict_from(ix, sub, std::move(outcome));
      for (Diagnosis& d : v.diagnoses) {
        d.span.begin += b;
        d.span.end += b;
      }
      std::vector<std::string> adjectives;
      if (v.parse) adjectives = v.parse->head_adjectives;
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i >= b && i < e) continue;
        auto it = ix.adjectives.find(tokens[i]);
        if (it != ix.adjectives.end() && !it->second.empty()) adjectives.push_back(it->second.front()->lemma);
      }
      ConstraintResult compat = check_adjective_compat(*lex_, language, adjectives, v.trace);
      for (const Violation& viol : compat.violations) {
        v.diagnoses.push_back({viol.rule, viol.message, {0, tokens.size()}});
      }
      if (v.parse) v.parse->tokens = tokens;
      if (!v.diagnoses.empty() && v.status == VerdictStatus::accepted) v.status = VerdictStatus::rejected;
      return v;
    }
  }
  return verdict_from(ix, tokens, ParseOutcome{});
}

Verdict validate_phrase(const Lexicon& lex, Language language, std::string_view text) {
  return PhraseMatcher(lex).validate(language, text);
}

std::optional<ParsedNP> parse_np(const Lexicon& lex, Language language, std::string_view text) {
  return PhraseMatcher(lex).parse(language, text);
}

Verdict validate_sentence(const Lexicon& lex, Language language, std::string_view text) {
  return PhraseMatcher(lex).validate_sentence(language, text);
}

}  // namespace combi
