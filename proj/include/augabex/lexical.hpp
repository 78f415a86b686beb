// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "augabex/corpus.hpp"

namespace augabex {

/// Relative term frequencies over an ordered support. `counts` keeps the raw
/// frequencies so that smoothed estimates can be formed later.
struct TermDistribution {
  std::vector<std::string> support;
  std::vector<double> counts;
  std::vector<double> probs;
};

/// Term distribution of `text` over `vocab` (its own sorted vocabulary when
/// no vocabulary is given). Throws when the text has no tokens or holds a
/// term outside `vocab`.
TermDistribution term_distribution(const SegmentedText& text,
                                   const std::optional<std::vector<std::string>>& vocab = std::nullopt);

/// Sorted union of the vocabularies of the given texts.
std::vector<std::string> union_vocabulary(std::initializer_list<const SegmentedText*> texts);

/// Jensen-Shannon distance (square root of the base-2 divergence), in [0, 1].
double jsd(const TermDistribution& p, const TermDistribution& q);

inline constexpr double kDefaultKldAlpha = 0.5;

/// KL divergence (natural log) of the additively smoothed summary
/// distribution from the smoothed document distribution.
double kld(const TermDistribution& summary_dist, const TermDistribution& doc_dist,
           double alpha = kDefaultKldAlpha);

// Convenience wrappers building the union vocabulary themselves.
double jsd_texts(const SegmentedText& a, const SegmentedText& b);
double kld_texts(const SegmentedText& summary, const SegmentedText& doc, double alpha = kDefaultKldAlpha);

}  // namespace augabex
