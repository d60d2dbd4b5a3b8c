#pragma once

// Domain model of the valency lexicon: roles, ontology classes, lexical
// entries, argument schemas with their slots and realizations, sentence frames,
// adjective annotations and co-occurrence tables. A Lexicon is built once and
// never mutated afterwards; every query module takes it by const reference.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "combi/types.hpp"

namespace combi {

struct SemanticRole {
  std::string id;
  RoleGroup group = RoleGroup::agentive_affected;
  std::map<Language, std::string> gloss;

  bool operator==(const SemanticRole&) const = default;
};

// Index into a lexical entry's form table. Nouns leave `gender` at none; case
// is only meaningful for German.
struct FormKey {
  Number number = Number::singular;
  Case grammatical_case = Case::nominative;
  Gender gender = Gender::none;

  auto operator<=>(const FormKey&) const = default;
};

// "sg", "pl.dat", "sg.f", "sg.acc.m" ...
std::optional<FormKey> parse_form_key(std::string_view text);
std::string format_form_key(const FormKey& key);

struct LexicalEntry {
  std::string lemma;
  Language language = Language::es;
  PartOfSpeech pos = PartOfSpeech::noun;
  Gender gender = Gender::none;
  // A present key with nullopt declares the form absent (plural-only nouns).
  std::map<FormKey, std::optional<std::string>> forms;
  std::vector<std::string> class_tags;
  Polarity polarity = Polarity::neutral;
  bool vowel_initial = false;
  bool proper = false;
  // Spanish feminine nouns with stressed initial a take "el"/"un" in the singular.
  bool stressed_a = false;
  // Linking form used as first element of a German compound (Zukunfts-).
  std::string compound_form;

  // Looks up (number, case, gender) with fallback to the gender-neutral and
  // then to the nominative form.
  std::optional<std::string> form(Number number, Case grammatical_case = Case::nominative,
                                  Gender agreement = Gender::none) const;
  bool has_number(Number number) const;

  bool operator==(const LexicalEntry&) const = default;
};

struct OntologyClass {
  std::string id;
  std::optional<std::string> parent;
  int depth = 1;
  std::map<Language, std::string> gloss;
  std::string example_lemma;
  Polarity connotation = Polarity::neutral;

  bool operator==(const OntologyClass&) const = default;
};

// Second endpoint of a two-part prepositional realization (von ... bis).
struct PairedRealization {
  std::string preposition;
  std::optional<Case> case_government;
  DeterminerPolicy determiner_policy = DeterminerPolicy::forbidden;
  // Filler classes that need the second endpoint; empty means every filler.
  std::vector<std::string> classes;

  bool operator==(const PairedRealization&) const = default;
};

struct FormalRealization {
  RealizationKind kind = RealizationKind::prepositional;
  std::string preposition;
  DeterminerPolicy determiner_policy = DeterminerPolicy::any;
  NumberPolicy filler_number_policy = NumberPolicy::both;
  std::optional<Case> case_government;
  // When non-empty, the realization only hosts fillers of these classes.
  std::vector<std::string> classes;
  // No further phrasal slot may follow this realization: a following
  // complement attaches to the filler instead of the head.
  bool closing = false;
  // Apposition direction: filler rendered before the head (2 Tage Aufenthalt).
  bool filler_first = false;

  bool operator==(const FormalRealization&) const = default;
};

struct Candidate {
  std::string lemma;
  NumberPolicy number = NumberPolicy::both;

  bool operator==(const Candidate&) const = default;
};

struct ArgumentSlot {
  int index = 1;
  std::string role;
  std::vector<FormalRealization> realizations;
  std::vector<std::string> allowed_classes;
  std::set<int> requires_slots;
  std::optional<PairedRealization> paired;
  // Noun-specific candidate membership: class id -> candidates.
  std::map<std::string, std::vector<Candidate>> membership;

  bool operator==(const ArgumentSlot&) const = default;
};

struct NumberCoRestriction {
  Number head = Number::singular;
  int slot = 1;
  Number filler = Number::singular;

  bool operator==(const NumberCoRestriction&) const = default;
};

// Filler class in a slot selects the preferred head number (les odeurs de Paris).
struct ClassHeadNumber {
  int slot = 1;
  std::string class_id;
  Number head = Number::plural;

  bool operator==(const ClassHeadNumber&) const = default;
};

struct ArgumentSchema {
  std::string head_lemma;
  Language language = Language::es;
  std::string sense_id;
  std::string sense_gloss;
  HeadNumberPolicy head_number_policy = HeadNumberPolicy::both;
  std::vector<ArgumentSlot> slots;
  // Surface order of phrasal slots; a permutation of the slot indices.
  std::vector<int> order;
  std::vector<NumberCoRestriction> co_restrictions;
  std::vector<ClassHeadNumber> class_head_number;

  const ArgumentSlot* slot(int index) const;
  // Position of `index` in the surface order; slots.size() when absent.
  std::size_t position_of(int index) const;

  bool operator==(const ArgumentSchema&) const = default;
};

struct ClassRequirement {
  int slot = 1;
  std::string class_prefix;

  bool operator==(const ClassRequirement&) const = default;
};

struct FrameOption {
  std::string text;         // singular / invariant form
  std::string plural_text;  // verb form agreeing with a plural NP subject
  std::string adjective;    // attribute: lemma of an adjective entry
  std::string prefix;       // attribute intensifier ("muy")
  Polarity polarity = Polarity::neutral;
  std::vector<ClassRequirement> requires_classes;

  bool operator==(const FrameOption&) const = default;
};

struct ClausePart {
  ClauseFunction function = ClauseFunction::subject;
  bool np_host = false;
  std::string preposition;  // prepositional complement hosting the NP
  std::optional<Case> case_government;
  std::vector<FrameOption> options;

  bool operator==(const ClausePart&) const = default;
};

struct SentenceFrame {
  std::string id;
  Language language = Language::es;
  std::string noun;
  std::string sense_id;
  VerbPosition verb_position = VerbPosition::before_np;
  std::vector<ClausePart> pattern;
  std::vector<std::string> np_adjectives;
  std::string standard_example;

  bool operator==(const SentenceFrame&) const = default;
};

struct AnnotatedAdjective {
  std::string adjective;
  std::optional<int> slot;  // nullopt: non-specific modifier
  std::string class_id;

  bool operator==(const AnnotatedAdjective&) const = default;
};

struct AdjectiveAnnotation {
  Language language = Language::es;
  std::string noun;
  std::string sense_id;
  AdjectivePosition position = AdjectivePosition::postnominal;
  std::vector<AnnotatedAdjective> items;

  bool operator==(const AdjectiveAnnotation&) const = default;
};

struct CooccurrenceCount {
  std::string lemma;
  std::uint64_t count = 0;
  std::string class_id;

  bool operator==(const CooccurrenceCount&) const = default;
};

struct CooccurrenceTable {
  Language language = Language::es;
  std::string noun;
  std::string sense_id;
  int slot = 1;
  std::vector<CooccurrenceCount> counts;

  bool operator==(const CooccurrenceTable&) const = default;
};

struct BundleMeta {
  std::string name;
  std::string version;
  std::vector<Language> languages;

  bool operator==(const BundleMeta&) const = default;
};

// Plain aggregate of everything a bundle declares.
struct LexiconData {
  BundleMeta meta;
  std::vector<SemanticRole> roles;
  std::vector<OntologyClass> ontology;
  std::vector<LexicalEntry> entries;
  std::vector<ArgumentSchema> schemas;
  std::vector<SentenceFrame> frames;
  std::vector<AdjectiveAnnotation> adjective_annotations;
  std::vector<CooccurrenceTable> cooccurrence;

  bool operator==(const LexiconData&) const = default;
};

class Lexicon {
 public:
  // Indexes `data` and resolves every cross-reference; throws IntegrityError
  // naming the first unresolved id.
  static Lexicon build(LexiconData data);

  const LexiconData& data() const noexcept { return data_; }
  const BundleMeta& meta() const noexcept { return data_.meta; }
  std::span<const SemanticRole> roles() const noexcept { return data_.roles; }
  std::span<const OntologyClass> ontology() const noexcept { return data_.ontology; }
  std::span<const LexicalEntry> entries() const noexcept { return data_.entries; }
  std::span<const ArgumentSchema> schemas() const noexcept { return data_.schemas; }
  std::span<const SentenceFrame> frames() const noexcept { return data_.frames; }

  const SemanticRole* role(std::string_view id) const;
  const OntologyClass* ontology_class(std::string_view id) const;
  const LexicalEntry* entry(Language language, std::string_view lemma) const;
  const ArgumentSchema* schema(Language language, std::string_view noun,
                               std::string_view sense_id) const;
  std::vector<const ArgumentSchema*> schemas_of(Language language,
                                                std::string_view noun) const;
  // Head nouns of `language` in declaration order, without duplicates.
  std::vector<std::string> nouns(Language language) const;
  const SentenceFrame* frame(std::string_view id) const;
  const AdjectiveAnnotation* adjective_annotation(Language language, std::string_view noun,
                                                  std::string_view sense_id,
                                                  AdjectivePosition position) const;
  const CooccurrenceTable* cooccurrence(Language language, std::string_view noun,
                                        std::string_view sense_id, int slot) const;

  std::vector<const OntologyClass*> children(std::string_view class_id) const;
  std::vector<const OntologyClass*> roots() const;
  // True when `class_id` equals `ancestor` or lies below it.
  static bool is_within(std::string_view class_id, std::string_view ancestor);
  // Nearest non-neutral connotation on the path to the root.
  Polarity connotation(std::string_view class_id) const;

  bool operator==(const Lexicon& other) const { return data_ == other.data_; }

 private:
  explicit Lexicon(LexiconData data) : data_(std::move(data)) {}
  void index();
  void check_integrity() const;

  LexiconData data_;
  std::unordered_map<std::string, std::size_t> roles_by_id_;
  std::unordered_map<std::string, std::size_t> classes_by_id_;
  std::map<std::pair<Language, std::string>, std::size_t, std::less<>> entries_by_key_;
  std::unordered_map<std::string, std::size_t> frames_by_id_;
};

// --- bundle format ----------------------------------------------------------

Lexicon load_bundle(std::istream& source);
Lexicon load_bundle_string(std::string_view document);
Lexicon load_bundle_file(const std::string& path);

// Canonical bundle document; load_bundle(dump_bundle(lex)) == lex.
std::string dump_bundle(const Lexicon& lexicon);

struct Finding {
  std::string code;
  std::string subject;
  std::string message;

  bool operator==(const Finding&) const = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool clean() const { return findings.empty(); }
};

ValidationReport validate_bundle(const Lexicon& lexicon);

struct SenseSchema {
  std::string sense_id;
  const ArgumentSchema* schema = nullptr;
};

// All senses of a noun ordered by sense id; NotFoundError for unknown lemmas.
std::vector<SenseSchema> schemas_for(const Lexicon& lexicon, Language language,
                                     std::string_view lemma);

// Resolves a schema or throws NotFoundError naming what is missing.
const ArgumentSchema& require_schema(const Lexicon& lexicon, Language language,
                                     std::string_view noun, std::string_view sense_id);

}  // namespace combi
