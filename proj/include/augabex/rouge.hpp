// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace augabex {

struct RougeScore {
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
};

/// F1 with beta = 1; 0 when precision + recall is 0.
RougeScore make_rouge_score(double recall, double precision);

/// Clipped n-gram overlap, n in {1, 2}. Either side shorter than n scores 0.
RougeScore rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference, int n);
/// Longest-common-subsequence overlap. An empty side scores 0.
RougeScore rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference);
/// Mean of ROUGE-1, ROUGE-2 and ROUGE-L F1.
double avg_rouge(std::span<const std::string> candidate, std::span<const std::string> reference);

// Same metrics over interned token ids; used by the candidate-selection loop
// where each sentence is scored against many others.
using TokenId = std::uint32_t;
RougeScore rouge_n_ids(std::span<const TokenId> candidate, std::span<const TokenId> reference, int n);
RougeScore rouge_l_ids(std::span<const TokenId> candidate, std::span<const TokenId> reference);
double avg_rouge_ids(std::span<const TokenId> candidate, std::span<const TokenId> reference);

/// Maps token strings to dense ids; ids are assigned in first-seen order.
class TokenInterner {
 public:
  TokenId intern(const std::string& token);
  std::vector<TokenId> intern_all(std::span<const std::string> tokens);
  std::size_t size() const { return ids_.size(); }

 private:
  std::unordered_map<std::string, TokenId> ids_;
};

}  // namespace augabex
