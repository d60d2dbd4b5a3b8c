#pragma once

#include <string>
#include <vector>

#include "combi/lexicon.hpp"
#include "combi/realize.hpp"

namespace combi {

// Rule ids carried by violations.
namespace rule {
inline constexpr const char* kUnknownSchema = "unknown-schema";
inline constexpr const char* kHeadNumber = "head-number";
inline constexpr const char* kClassMembership = "class-membership";
inline constexpr const char* kRealization = "realization";
inline constexpr const char* kDeterminerPolicy = "determiner-policy";
inline constexpr const char* kFillerNumber = "filler-number";
inline constexpr const char* kCandidateNumber = "candidate-number";
inline constexpr const char* kNumberCoRestriction = "number-co-restriction";
inline constexpr const char* kSlotInterdependence = "slot-interdependence";
inline constexpr const char* kPairedRealization = "paired-realization";
inline constexpr const char* kClassHeadNumber = "class-conditioned-head-number";
inline constexpr const char* kSlotOrder = "slot-order";
}  // namespace rule

struct Violation {
  std::string rule;
  int slot = 0;  // 0 when the violation concerns the head
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ConstraintResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view rule_id) const;
};

ConstraintResult check_constraints(const Lexicon& lex, const FilledPhrase& phrase);

// Number policy of `lemma` within the slot's membership; `both` when the lemma
// is listed without restriction, nullopt when it is not a member of `class_id`.
std::optional<NumberPolicy> candidate_policy(const ArgumentSlot& slot, std::string_view class_id,
                                             std::string_view lemma);

// True when the realization may host a filler of `class_id`.
bool realization_hosts(const FormalRealization& r, std::string_view class_id);

// True when a filler of `class_id` in realization `r` needs the slot's second
// endpoint (von ... bis).
bool needs_pair(const ArgumentSlot& slot, const FormalRealization& r, std::string_view class_id);

}  // namespace combi
