#pragma once

// Queries over the class taxonomy and the noun-specific slot membership.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "combi/lexicon.hpp"

namespace combi {

struct SlotRef {
  Language language = Language::es;
  std::string noun;
  std::string sense_id;
  int slot = 1;
};

struct ClassChoice {
  const OntologyClass* cls = nullptr;
  std::string example;
  std::size_t member_count = 0;
};

// Next drill-down level for a slot. Without a parent: the roots; otherwise the
// children of `parent`. Only classes with candidates below them are listed.
std::vector<ClassChoice> drilldown(const Lexicon& lex, const SlotRef& ref,
                                   std::optional<std::string_view> parent = std::nullopt);

// Candidates of `class_id` (or any class below it) for this noun's slot, in
// membership order without duplicates.
std::vector<Candidate> members(const Lexicon& lex, const SlotRef& ref, std::string_view class_id);

// As above, annotated with the membership class each candidate came from.
struct ClassedCandidate {
  Candidate candidate;
  std::string class_id;
};
std::vector<ClassedCandidate> classed_members(const Lexicon& lex, const ArgumentSlot& slot,
                                              std::string_view class_id);

// DomainError unless `class_id` is declared and lies on a path through one of
// the slot's allowed classes.
void require_class_allowed(const Lexicon& lex, const ArgumentSlot& slot, std::string_view class_id);

struct Prototype {
  std::string lemma;
  SlotRef slot;
  std::uint64_t count = 0;
  int rank = 0;
  std::string class_id;
};

std::vector<Prototype> rank_prototypes(const Lexicon& lex, const SlotRef& ref);

struct ResourceItem {
  std::string lemma;
  std::string class_path;
  std::size_t order = 0;  // position in the resource
};

class LexicalResource {
 public:
  virtual ~LexicalResource() = default;
  virtual std::vector<ResourceItem> synonyms_of(std::string_view lemma, Language language) const = 0;
  virtual std::vector<ResourceItem> hyponyms_of(std::string_view anchor, Language language) const = 0;
};

// Class-tagged word list read from a JSON array of records
// {lemma, language, class, gender, forms, synonyms?, hypernyms?}. Synonyms of a
// lemma include its sister terms (records sharing a hypernym).
class FileLexicalResource : public LexicalResource {
 public:
  static FileLexicalResource from_string(std::string_view document);
  static FileLexicalResource from_file(const std::string& path);

  std::vector<ResourceItem> synonyms_of(std::string_view lemma, Language language) const override;
  std::vector<ResourceItem> hyponyms_of(std::string_view anchor, Language language) const override;

  std::size_t size() const { return records_.size(); }

 private:
  struct Record {
    std::string lemma;
    Language language = Language::es;
    std::string class_path;
    std::vector<std::string> synonyms;
    std::vector<std::string> hypernyms;
  };
  std::vector<Record> records_;
};

struct ExpansionCandidate {
  std::string lemma;
  std::string class_id;
  bool unreviewed = true;
};

// Lemmas offered by the resource for the seeds of a slot class that fall under
// that class and are not members yet. Ordered by resource position, then lemma.
std::vector<ExpansionCandidate> expand_candidates(const Lexicon& lex, const LexicalResource& resource,
                                                  const SlotRef& ref, std::string_view class_id);

struct RoleShare {
  std::string label;  // "non-specific", "arg1", "arg2", ...
  std::size_t count = 0;
  int percent = 0;
};

struct RoleDistribution {
  std::size_t total = 0;
  std::vector<RoleShare> shares;

  // 0 for labels absent from the list.
  int percent(std::string_view label) const;
};

RoleDistribution classify_adjectives(const Lexicon& lex, Language language, std::string_view noun,
                                     std::string_view sense_id, AdjectivePosition position);

// Half-up integer percentage of part/total.
int percent_half_up(std::size_t part, std::size_t total);

}  // namespace combi
