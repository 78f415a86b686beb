// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace augabex {

enum class Orientation { kHigherIsBetter, kLowerIsBetter };

struct PairedRow {
  std::string id;
  double score_o = 0.0;
  double score_t = 0.0;
  bool operator==(const PairedRow&) const = default;
};

/// Instance-level scores of the reference system O and the system under
/// test T for one metric.
struct PairedScores {
  std::string metric;
  Orientation orientation = Orientation::kHigherIsBetter;
  std::vector<PairedRow> rows;

  /// Throws ValidationError on duplicate ids or non-finite scores.
  void validate() const;
};

struct BtTally {
  std::size_t wins_o = 0;
  std::size_t wins_t = 0;
  std::size_t ties = 0;
};

enum class TieMode {
  kSplit,  // a tie counts half a win for each side
  kDrop,   // ties are ignored
};

struct BtStrength {
  BtTally tally;
  double lambda_o = 0.5;
  double lambda_t = 0.5;
};

BtTally bt_tally(const PairedScores& scores);

/// Win-fraction Bradley-Terry strengths, P(O > T) = wins_o / (wins_o + wins_t).
/// lambda_o + lambda_t == 1 exactly. With kDrop and only ties both are 0.5.
BtStrength bt_strength(const PairedScores& scores, TieMode ties = TieMode::kSplit);

struct MacroAverage {
  double mean = 0.0;
  double median = 0.0;  // lower middle for an even count
  std::size_t n_defined = 0;
};

/// Averages the defined values; throws ValidationError when none is defined.
MacroAverage macro_average(const std::vector<std::optional<double>>& values);
MacroAverage macro_average(const std::vector<double>& values);

/// CSV "id,score_o,score_t", rows sorted by id, shortest round-trip floats.
void write_paired(const PairedScores& scores, std::ostream& out);
void export_paired(const PairedScores& scores, const std::filesystem::path& path);
PairedScores read_paired(std::istream& in, std::string metric = {},
                         Orientation orientation = Orientation::kHigherIsBetter);
PairedScores load_paired(const std::filesystem::path& path, std::string metric = {},
                         Orientation orientation = Orientation::kHigherIsBetter);

/// Ids of the n_top highest and then the n_bottom lowest score_t rows (ties
/// broken by id). The two groups never share an id.
std::vector<std::string> sample_for_review(const PairedScores& scores, std::size_t n_top, std::size_t n_bottom);

}  // namespace augabex
