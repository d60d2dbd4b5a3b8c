#include "combi/frames.hpp"

#include <unordered_set>

#include "combi/error.hpp"
#include "combi/random.hpp"
#include "combi/text.hpp"

namespace combi {

namespace {

// Draws per NP before a frame gives up on finding compatible fillers for it.
constexpr int kFillAttempts = 8;

bool satisfied_by_trace(const FrameOption& option, const std::vector<TraceItem>& trace) {
  for (const ClassRequirement& req : option.requires_classes) {
    bool met = false;
    for (const TraceItem& t : trace) {
      if (t.slot == req.slot && Lexicon::is_within(t.class_id, req.class_prefix)) met = true;
    }
    if (!met) return false;
  }
  return true;
}

bool satisfiable_by_template(const FrameOption& option, const StructureTemplate& tmpl) {
  for (const ClassRequirement& req : option.requires_classes) {
    bool met = false;
    for (const SlotChoice& c : tmpl.slots) {
      if (c.slot == req.slot && (Lexicon::is_within(c.class_id, req.class_prefix) ||
                                 Lexicon::is_within(req.class_prefix, c.class_id))) {
        met = true;
      }
    }
    if (!met) return false;
  }
  return true;
}

Case np_case(Language language, const ClausePart& part) {
  if (language != Language::de) return Case::nominative;
  switch (part.function) {
    case ClauseFunction::direct_object:
      return Case::accusative;
    case ClauseFunction::prepositional_complement:
      return part.case_government.value_or(Case::dative);
    default:
      return part.case_government.value_or(Case::nominative);
  }
}

Polarity polarity_of(const Lexicon& lex, Language language, std::string_view lemma) {
  const LexicalEntry* e = lex.entry(language, lemma);
  return e ? e->polarity : Polarity::neutral;
}

void push_words(std::vector<Token>& out, std::string_view words) {
  for (std::string& w : text::split_words(words)) {
    bool vowel = text::vowel_initial(w);
    out.push_back(Token{std::move(w), vowel, false});
  }
}

}  // namespace

std::vector<const SentenceFrame*> list_frames(const Lexicon& lex, Language language,
                                              std::string_view noun, std::string_view sense_id,
                                              std::optional<VerbPosition> position) {
  std::vector<const SentenceFrame*> out;
  for (const SentenceFrame& f : lex.frames()) {
    if (f.language != language || f.noun != noun) continue;
    if (!sense_id.empty() && f.sense_id != sense_id) continue;
    if (position && f.verb_position != *position) continue;
    out.push_back(&f);
  }
  return out;
}

ConstraintResult check_adjective_compat(const Lexicon& lex, Language language,
                                        const std::vector<std::string>& adjectives,
                                        const std::vector<TraceItem>& trace) {
  ConstraintResult result;
  for (std::size_t i = 0; i < adjectives.size(); ++i) {
    Polarity a = polarity_of(lex, language, adjectives[i]);
    if (a == Polarity::neutral) continue;
    for (std::size_t j = i + 1; j < adjectives.size(); ++j) {
      Polarity b = polarity_of(lex, language, adjectives[j]);
      if (b != Polarity::neutral && b != a) {
        result.violations.push_back({rule::kPolarityClash, 0,
                                     "\"" + adjectives[i] + "\" and \"" + adjectives[j] +
                                         "\" have opposite polarity"});
      }
    }
    for (const TraceItem& t : trace) {
      Polarity c = lex.connotation(t.class_id);
      if (c != Polarity::neutral && c != a) {
        result.violations.push_back({rule::kClassConnotation, t.slot,
                                     "\"" + adjectives[i] + "\" is " + std::string(name_of(a)) +
                                         " but class " + t.class_id + " is " +
                                         std::string(name_of(c))});
      }
    }
  }
  return result;
}

std::vector<Sentence> generate_sentences(const Lexicon& lex, const SentenceFrame& frame,
                                         const StructureTemplate& tmpl, const SentenceOptions& options) {
  if (frame.language != tmpl.language || frame.noun != tmpl.noun || frame.sense_id != tmpl.sense_id) {
    throw DomainError("frame " + frame.id + " does not host " + tmpl.noun + "/" + tmpl.sense_id);
  }
  for (const ClausePart& part : frame.pattern) {
    if (part.function != ClauseFunction::verb) continue;
    bool any = false;
    for (const FrameOption& o : part.options) any = any || satisfiable_by_template(o, tmpl);
    if (!any) throw FrameIncompleteError("frame " + frame.id + " has no verb for this structure");
  }
  if (options.limit == 0) return {};

  const LexicalEntry* head = lex.entry(tmpl.language, tmpl.noun);
  const Gender gender = head ? head->gender : Gender::none;
  bool np_is_subject = false;
  for (const ClausePart& part : frame.pattern) {
    if (part.np_host && part.function == ClauseFunction::subject) np_is_subject = true;
  }
  bool leading_filler = false;
  const ArgumentSchema& schema = require_schema(lex, tmpl.language, tmpl.noun, tmpl.sense_id);
  for (const SlotChoice& c : tmpl.slots) {
    const FormalRealization& r = schema.slot(c.slot)->realizations[c.realization];
    if (r.kind == RealizationKind::apposition && r.filler_first) leading_filler = true;
  }

  GenerateOptions np_options;
  np_options.seed = options.seed;
  np_options.limit = options.limit * 4 + 16;
  std::vector<GeneratedPhrase> nps = generate_phrases(lex, tmpl, np_options);

  Rng rng(sub_seed(options.seed, 1));
  std::vector<Sentence> out;
  std::unordered_set<std::string> seen;
  for (const GeneratedPhrase& np : nps) {
    if (out.size() >= options.limit) break;
    for (int attempt = 0; attempt < kFillAttempts; ++attempt) {
      std::string adjective;
      if (!frame.np_adjectives.empty() && !leading_filler) {
        std::size_t k = rng.below(frame.np_adjectives.size() + 1);
        if (k < frame.np_adjectives.size()) adjective = frame.np_adjectives[k];
      }

      std::vector<const FrameOption*> chosen(frame.pattern.size(), nullptr);
      bool complete = true;
      for (std::size_t i = 0; i < frame.pattern.size() && complete; ++i) {
        const ClausePart& part = frame.pattern[i];
        if (part.np_host) continue;
        std::vector<const FrameOption*> fit;
        for (const FrameOption& o : part.options) {
          if (satisfied_by_trace(o, np.trace)) fit.push_back(&o);
        }
        if (fit.empty()) {
          complete = false;
        } else {
          chosen[i] = fit[rng.below(fit.size())];
        }
      }
      if (!complete) break;

      std::vector<std::string> adjectives;
      if (!adjective.empty()) adjectives.push_back(adjective);
      for (const FrameOption* o : chosen) {
        if (o && !o->adjective.empty()) adjectives.push_back(o->adjective);
      }
      if (!check_adjective_compat(lex, tmpl.language, adjectives, np.trace).ok()) continue;

      FilledPhrase fp = to_filled(tmpl, np.trace);
      if (!adjective.empty()) fp.head_adjectives.push_back({adjective, true});

      std::vector<Token> tokens;
      for (std::size_t i = 0; i < frame.pattern.size(); ++i) {
        const ClausePart& part = frame.pattern[i];
        if (part.np_host) {
          if (!part.preposition.empty()) push_words(tokens, part.preposition);
          FilledPhrase hosted = fp;
          hosted.head_case = np_case(tmpl.language, part);
          for (Token& t : np_tokens(lex, hosted)) tokens.push_back(std::move(t));
          continue;
        }
        const FrameOption& o = *chosen[i];
        if (part.function == ClauseFunction::verb) {
          bool plural = np_is_subject && tmpl.head_number == Number::plural && !o.plural_text.empty();
          push_words(tokens, plural ? o.plural_text : o.text);
        } else if (part.function == ClauseFunction::attribute && !o.adjective.empty()) {
          if (!o.prefix.empty()) push_words(tokens, o.prefix);
          push_words(tokens, adjective_form(lex, tmpl.language, o.adjective, gender, tmpl.head_number,
                                            Case::nominative));
        } else {
          push_words(tokens, o.text);
        }
      }

      Sentence s;
      s.text = text::capitalize_first(join_tokens(apply_rewrites(tmpl.language, std::move(tokens)))) + ".";
      if (!seen.insert(s.text).second) break;
      s.np_surface = realize_np(lex, fp);
      s.frame_id = frame.id;
      s.adjectives = std::move(adjectives);
      s.np = np;
      out.push_back(std::move(s));
      break;
    }
  }
  return out;
}

}  // namespace combi
