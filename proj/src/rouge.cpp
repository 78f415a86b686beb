// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "augabex/error.hpp"
#include "augabex/rouge.hpp"

namespace augabex {
namespace {

std::uint64_t gram_key(std::span<const TokenId> toks, std::size_t i, int n) {
  // ids are < 2^32, so a bigram packs into one 64-bit key.
  return n == 1 ? toks[i] : (static_cast<std::uint64_t>(toks[i]) << 32) | toks[i + 1];
}

}  // namespace

RougeScore make_rouge_score(double recall, double precision) {
  RougeScore s{recall, precision, 0.0};
  if (recall + precision > 0.0) s.f1 = 2.0 * precision * recall / (precision + recall);
  return s;
}

TokenId TokenInterner::intern(const std::string& token) {
  auto [it, inserted] = ids_.try_emplace(token, static_cast<TokenId>(ids_.size()));
  return it->second;
}

std::vector<TokenId> TokenInterner::intern_all(std::span<const std::string> tokens) {
  std::vector<TokenId> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(intern(t));
  return out;
}

RougeScore rouge_n_ids(std::span<const TokenId> candidate, std::span<const TokenId> reference, int n) {
  if (n != 1 && n != 2) throw ValidationError("rouge_n: n must be 1 or 2");
  const auto un = static_cast<std::size_t>(n);
  if (candidate.size() < un || reference.size() < un) return {};
  const std::size_t ref_grams = reference.size() - un + 1;
  const std::size_t cand_grams = candidate.size() - un + 1;

  std::unordered_map<std::uint64_t, std::size_t> ref_counts;
  ref_counts.reserve(ref_grams);
  for (std::size_t i = 0; i < ref_grams; ++i) ++ref_counts[gram_key(reference, i, n)];
  std::size_t overlap = 0;
  for (std::size_t i = 0; i < cand_grams; ++i) {
    auto it = ref_counts.find(gram_key(candidate, i, n));
    if (it != ref_counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  return make_rouge_score(static_cast<double>(overlap) / static_cast<double>(ref_grams),
                          static_cast<double>(overlap) / static_cast<double>(cand_grams));
}

RougeScore rouge_l_ids(std::span<const TokenId> candidate, std::span<const TokenId> reference) {
  if (candidate.empty() || reference.empty()) return {};
  std::vector<std::size_t> prev(reference.size() + 1, 0), cur(reference.size() + 1, 0);
  for (std::size_t i = 1; i <= candidate.size(); ++i) {
    for (std::size_t j = 1; j <= reference.size(); ++j) {
      cur[j] = candidate[i - 1] == reference[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  const auto lcs = static_cast<double>(prev[reference.size()]);
  return make_rouge_score(lcs / static_cast<double>(reference.size()),
                          lcs / static_cast<double>(candidate.size()));
}

double avg_rouge_ids(std::span<const TokenId> candidate, std::span<const TokenId> reference) {
  return (rouge_n_ids(candidate, reference, 1).f1 + rouge_n_ids(candidate, reference, 2).f1 +
          rouge_l_ids(candidate, reference).f1) /
         3.0;
}

namespace {
struct InternedPair {
  std::vector<TokenId> cand, ref;
};
InternedPair intern_pair(std::span<const std::string> candidate, std::span<const std::string> reference) {
  TokenInterner interner;
  InternedPair p;
  p.cand = interner.intern_all(candidate);
  p.ref = interner.intern_all(reference);
  return p;
}
}  // namespace

RougeScore rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference, int n) {
  const auto p = intern_pair(candidate, reference);
  return rouge_n_ids(p.cand, p.ref, n);
}

RougeScore rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference) {
  const auto p = intern_pair(candidate, reference);
  return rouge_l_ids(p.cand, p.ref);
}

double avg_rouge(std::span<const std::string> candidate, std::span<const std::string> reference) {
  const auto p = intern_pair(candidate, reference);
  return avg_rouge_ids(p.cand, p.ref);
}

}  // namespace augabex
