// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "augabex/lsa.hpp"
#include "augabex/transform.hpp"

namespace augabex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPartial = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  std::filesystem::path input;
  std::optional<std::filesystem::path> teg;
  std::filesystem::path out = ".";
  std::size_t k = 2;
  double lambda = 0.5;
  double alpha = 0.5;
  std::optional<std::filesystem::path> stopwords;
  EntitySource entities = EntitySource::kPattern;
  std::optional<std::filesystem::path> embeddings;
  std::vector<std::size_t> k_values = {1, 2, 3};
  std::size_t top = 2;
  std::size_t bottom = 2;
  std::size_t workers = 1;

  /// Checks paths and parameter ranges before any work starts. Throws
  /// UsageError.
  void validate() const;
  /// --stopwords, then $AUGABEX_STOPWORDS, then the bundled list.
  StopwordSet resolve_stopwords() const;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dispatches on cfg.command. Progress and tables go to `log`; problems to
/// `err`. Returns the process exit code.
int run(const RunConfig& cfg, std::ostream& log, std::ostream& err);

int cmd_transform(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_evaluate(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_baseline_lsa(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_sweep_k(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_stats(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_sample_review(const RunConfig& cfg, std::ostream& log, std::ostream& err);

/// One line of the TEG / LSA summary JSONL files.
struct SummaryLine {
  std::string id;
  std::vector<std::size_t> selected_indices;
  std::string text;
  std::size_t word_count = 0;
};

/// Reads TEG JSONL ("teg" text field) or LSA JSONL ("lsa" text field).
std::vector<SummaryLine> load_summaries(const std::filesystem::path& path);

/// Parses "1,2,3" into k values; throws UsageError.
std::vector<std::size_t> parse_k_values(const std::string& text);

}  // namespace augabex::cli
