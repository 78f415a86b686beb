// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace augabex::testing {

// Small deterministic generators for property tests. Every generator draws
// from the caller's engine so a failing seed can be replayed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // Words drawn from a fixed alphabet "w0".."w{vocab-1}".
  std::vector<std::string> tokens(std::size_t len, std::size_t vocab) {
    std::vector<std::string> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back("w" + std::to_string(size(0, vocab - 1)));
    return out;
  }

  std::vector<double> counts(std::size_t dim, std::size_t max_count) {
    std::vector<double> v(dim);
    for (auto& x : v) x = static_cast<double>(size(0, max_count));
    return v;
  }

  // A sentence of lowercase vocabulary words, capitalized and ending in a period.
  std::string sentence(std::size_t min_len, std::size_t max_len, const std::vector<std::string>& words) {
    std::string s;
    const std::size_t n = size(min_len, max_len);
    for (std::size_t i = 0; i < n; ++i) {
      if (i) s += ' ';
      s += words[size(0, words.size() - 1)];
    }
    s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s + '.';
  }

  std::string text(std::size_t n_sentences, std::size_t min_len, std::size_t max_len,
                   const std::vector<std::string>& words) {
    std::string out;
    for (std::size_t i = 0; i < n_sentences; ++i) {
      if (i) out += ' ';
      out += sentence(min_len, max_len, words);
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline const std::vector<std::string>& legal_words() {
  static const std::vector<std::string> words = {
      "appeal",  "court",    "section", "order",   "petition", "evidence", "witness", "decree",
      "tribunal", "land",    "tax",     "service", "contract", "the",      "of",      "and",
      "was",      "held",    "claim",   "relief",  "trial",    "judge",    "state",   "union"};
  return words;
}

}  // namespace augabex::testing
