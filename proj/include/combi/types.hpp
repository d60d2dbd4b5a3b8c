#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace combi {

enum class Language { es, fr, de };
enum class Number { singular, plural };
enum class Case { nominative, accusative, dative, genitive };
enum class Gender { none, masculine, feminine, neuter };
enum class Polarity { neutral, pleasant, unpleasant };
enum class PartOfSpeech { noun, adjective };
enum class RoleGroup { agentive_affected, classificative_situative };

enum class RealizationKind { prepositional, genitive, apposition, compound, adjectival };
enum class DeterminerPolicy { required_definite, required_indefinite, forbidden, any };
enum class NumberPolicy { singular, plural, both, per_candidate };
enum class HeadNumberPolicy { singular_only, plural_only, both };
enum class Determiner { none, definite, indefinite };

enum class AdjectivePosition { prenominal, postnominal };
enum class VerbPosition { before_np, after_np };
enum class ClauseFunction {
  subject,
  verb,
  direct_object,
  adverb,
  attribute,
  prepositional_complement
};

// Wire names for every enum. The bundle format, the HTTP API and the CLI all
// use these spellings.
template <typename E>
struct EnumNames;

template <>
struct EnumNames<Language> {
  static constexpr std::array<std::pair<Language, std::string_view>, 3> table{{
      {Language::es, "es"},
      {Language::fr, "fr"},
      {Language::de, "de"},
  }};
};

template <>
struct EnumNames<Number> {
  static constexpr std::array<std::pair<Number, std::string_view>, 2> table{{
      {Number::singular, "singular"},
      {Number::plural, "plural"},
  }};
};

template <>
struct EnumNames<Case> {
  static constexpr std::array<std::pair<Case, std::string_view>, 4> table{{
      {Case::nominative, "nominative"},
      {Case::accusative, "accusative"},
      {Case::dative, "dative"},
      {Case::genitive, "genitive"},
  }};
};

template <>
struct EnumNames<Gender> {
  static constexpr std::array<std::pair<Gender, std::string_view>, 4> table{{
      {Gender::none, "n/a"},
      {Gender::masculine, "masc"},
      {Gender::feminine, "fem"},
      {Gender::neuter, "neut"},
  }};
};

template <>
struct EnumNames<Polarity> {
  static constexpr std::array<std::pair<Polarity, std::string_view>, 3> table{{
      {Polarity::neutral, "neutral"},
      {Polarity::pleasant, "pleasant"},
      {Polarity::unpleasant, "unpleasant"},
  }};
};

template <>
struct EnumNames<PartOfSpeech> {
  static constexpr std::array<std::pair<PartOfSpeech, std::string_view>, 2> table{{
      {PartOfSpeech::noun, "noun"},
      {PartOfSpeech::adjective, "adjective"},
  }};
};

template <>
struct EnumNames<RoleGroup> {
  static constexpr std::array<std::pair<RoleGroup, std::string_view>, 2> table{{
      {RoleGroup::agentive_affected, "agentive-affected"},
      {RoleGroup::classificative_situative, "classificative-situative"},
  }};
};

template <>
struct EnumNames<RealizationKind> {
  static constexpr std::array<std::pair<RealizationKind, std::string_view>, 5> table{{
      {RealizationKind::prepositional, "prepositional"},
      {RealizationKind::genitive, "genitive"},
      {RealizationKind::apposition, "apposition"},
      {RealizationKind::compound, "compound"},
      {RealizationKind::adjectival, "adjectival"},
  }};
};

template <>
struct EnumNames<DeterminerPolicy> {
  static constexpr std::array<std::pair<DeterminerPolicy, std::string_view>, 4> table{{
      {DeterminerPolicy::required_definite, "required-definite"},
      {DeterminerPolicy::required_indefinite, "required-indefinite"},
      {DeterminerPolicy::forbidden, "forbidden"},
      {DeterminerPolicy::any, "any"},
  }};
};

template <>
struct EnumNames<NumberPolicy> {
  static constexpr std::array<std::pair<NumberPolicy, std::string_view>, 4> table{{
      {NumberPolicy::singular, "singular"},
      {NumberPolicy::plural, "plural"},
      {NumberPolicy::both, "both"},
      {NumberPolicy::per_candidate, "per-candidate"},
  }};
};

template <>
struct EnumNames<HeadNumberPolicy> {
  static constexpr std::array<std::pair<HeadNumberPolicy, std::string_view>, 3> table{{
      {HeadNumberPolicy::singular_only, "singular-only"},
      {HeadNumberPolicy::plural_only, "plural-only"},
      {HeadNumberPolicy::both, "both"},
  }};
};

template <>
struct EnumNames<Determiner> {
  static constexpr std::array<std::pair<Determiner, std::string_view>, 3> table{{
      {Determiner::none, "none"},
      {Determiner::definite, "definite"},
      {Determiner::indefinite, "indefinite"},
  }};
};

template <>
struct EnumNames<AdjectivePosition> {
  static constexpr std::array<std::pair<AdjectivePosition, std::string_view>, 2> table{{
      {AdjectivePosition::prenominal, "prenominal"},
      {AdjectivePosition::postnominal, "postnominal"},
  }};
};

template <>
struct EnumNames<VerbPosition> {
  static constexpr std::array<std::pair<VerbPosition, std::string_view>, 2> table{{
      {VerbPosition::before_np, "before-np"},
      {VerbPosition::after_np, "after-np"},
  }};
};

template <>
struct EnumNames<ClauseFunction> {
  static constexpr std::array<std::pair<ClauseFunction, std::string_view>, 6> table{{
      {ClauseFunction::subject, "subject"},
      {ClauseFunction::verb, "verb"},
      {ClauseFunction::direct_object, "direct-object"},
      {ClauseFunction::adverb, "adverb"},
      {ClauseFunction::attribute, "attribute"},
      {ClauseFunction::prepositional_complement, "prepositional-complement"},
  }};
};

template <typename E>
constexpr std::string_view name_of(E value) {
  for (const auto& [v, name] : EnumNames<E>::table) {
    if (v == value) return name;
  }
  return "?";
}

template <typename E>
constexpr std::optional<E> parse_enum(std::string_view text) {
  for (const auto& [v, name] : EnumNames<E>::table) {
    if (name == text) return v;
  }
  return std::nullopt;
}

constexpr bool allows(NumberPolicy policy, Number number) {
  switch (policy) {
    case NumberPolicy::singular:
      return number == Number::singular;
    case NumberPolicy::plural:
      return number == Number::plural;
    default:
      return true;
  }
}

constexpr bool allows(HeadNumberPolicy policy, Number number) {
  switch (policy) {
    case HeadNumberPolicy::singular_only:
      return number == Number::singular;
    case HeadNumberPolicy::plural_only:
      return number == Number::plural;
    default:
      return true;
  }
}

constexpr bool allows(DeterminerPolicy policy, Determiner det) {
  switch (policy) {
    case DeterminerPolicy::required_definite:
      return det == Determiner::definite;
    case DeterminerPolicy::required_indefinite:
      return det == Determiner::indefinite;
    case DeterminerPolicy::forbidden:
      return det == Determiner::none;
    case DeterminerPolicy::any:
      return true;
  }
  return false;
}

constexpr std::array<Number, 2> kNumbers{Number::singular, Number::plural};

}  // namespace combi
