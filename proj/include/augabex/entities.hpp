// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace augabex {

/// Legal named-entity labels.
enum class EntityLabel {
  kCourt,
  kPetitioner,
  kRespondent,
  kJudge,
  kLawyer,
  kDate,
  kOrg,
  kGpe,
  kStatute,
  kProvision,
  kPrecedent,
  kCaseNumber,
  kWitness,
  kOtherPerson,
};

inline constexpr std::size_t kEntityLabelCount = 14;

std::string_view label_name(EntityLabel label);
/// Parses the upper-case label name ("PROVISION"); nullopt when unknown.
std::optional<EntityLabel> parse_label(std::string_view name);

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  bool operator==(const Span&) const = default;
};

struct EntityAnnotation {
  EntityLabel label = EntityLabel::kOtherPerson;
  std::string surface;
  std::optional<Span> span;
  bool operator==(const EntityAnnotation&) const = default;
};

enum class ProvisionKind { kSection, kArticle, kRule, kOrder, kClause };

std::string_view kind_name(ProvisionKind kind);

/// Normalized identity of a provision reference, e.g. (section, "5(2)").
struct ProvisionKey {
  ProvisionKind kind = ProvisionKind::kSection;
  std::string number;

  auto operator<=>(const ProvisionKey&) const = default;
  /// "section 5(2)"; normalizing this string yields the same key.
  std::string to_string() const;
};

/// Scans raw text for PROVISION and STATUTE mentions. Matches are returned
/// sorted by span start and never overlap; at any start position the longest
/// match wins. Enumerations ("Articles 14, 16 and 21") yield one PROVISION
/// per number.
std::vector<EntityAnnotation> extract_pattern_entities(std::string_view text);

/// Throws ValidationError (carrying the surface) when the surface does not
/// start with a provision keyword followed by a number.
ProvisionKey normalize_provision(const EntityAnnotation& entity);

inline std::size_t lent_cnt(const std::vector<EntityAnnotation>& entities) {
  return entities.size();
}

/// |PO ∩ PT| / |PO| over normalized provision keys. nullopt when the OAG side
/// has no provisions. Provision surfaces that cannot be normalized are
/// ignored on both sides.
std::optional<double> prov_recall(const std::vector<EntityAnnotation>& oag_entities,
                                  const std::vector<EntityAnnotation>& teg_entities);

}  // namespace augabex
