// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

// Reference implementations written for clarity, not speed. They share no
// code with the library beyond plain data types.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace augabex::testing {

struct OracleRouge {
  double recall = 0.0, precision = 0.0, f1 = 0.0;
};

inline OracleRouge oracle_prf(double matches, double ref_total, double cand_total) {
  OracleRouge r;
  if (ref_total == 0 || cand_total == 0) return r;
  r.recall = matches / ref_total;
  r.precision = matches / cand_total;
  if (r.recall + r.precision > 0) r.f1 = 2 * r.recall * r.precision / (r.recall + r.precision);
  return r;
}

inline std::map<std::vector<std::string>, int> oracle_ngrams(const std::vector<std::string>& t, std::size_t n) {
  std::map<std::vector<std::string>, int> out;
  for (std::size_t i = 0; i + n <= t.size(); ++i) ++out[std::vector<std::string>(t.begin() + i, t.begin() + i + n)];
  return out;
}

inline OracleRouge oracle_rouge_n(const std::vector<std::string>& cand, const std::vector<std::string>& ref,
                                  std::size_t n) {
  const auto c = oracle_ngrams(cand, n), r = oracle_ngrams(ref, n);
  int matches = 0, ref_total = 0, cand_total = 0;
  for (const auto& [g, cnt] : r) {
    ref_total += cnt;
    auto it = c.find(g);
    if (it != c.end()) matches += std::min(cnt, it->second);
  }
  for (const auto& [g, cnt] : c) cand_total += cnt;
  return oracle_prf(matches, ref_total, cand_total);
}

// Full-table LCS by memoized recursion.
inline std::size_t oracle_lcs(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::vector<long>> memo(a.size() + 1, std::vector<long>(b.size() + 1, -1));
  std::function<long(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> long {
    if (i == a.size() || j == b.size()) return 0;
    long& m = memo[i][j];
    if (m >= 0) return m;
    if (a[i] == b[j]) return m = 1 + go(i + 1, j + 1);
    return m = std::max(go(i + 1, j), go(i, j + 1));
  };
  return static_cast<std::size_t>(go(0, 0));
}

inline OracleRouge oracle_rouge_l(const std::vector<std::string>& cand, const std::vector<std::string>& ref) {
  return oracle_prf(static_cast<double>(oracle_lcs(cand, ref)), static_cast<double>(ref.size()),
                    static_cast<double>(cand.size()));
}

inline double oracle_avg_rouge(const std::vector<std::string>& cand, const std::vector<std::string>& ref) {
  return (oracle_rouge_n(cand, ref, 1).f1 + oracle_rouge_n(cand, ref, 2).f1 + oracle_rouge_l(cand, ref).f1) / 3.0;
}

inline double oracle_cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double ab = 0, aa = 0, bb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  if (aa == 0 || bb == 0) return 0.0;
  return ab / (std::sqrt(aa) * std::sqrt(bb));
}

struct OracleStep {
  std::size_t pick = 0;  // position in the input list
  double score = 0.0;
};

// Greedy MMR re-evaluated from scratch at every step. Candidates are given in
// document order; `words[i]` is the length of candidate i.
inline std::vector<OracleStep> oracle_mmr(const std::vector<std::vector<double>>& tf,
                                          const std::vector<std::size_t>& words, double lambda,
                                          std::size_t budget, double tie = 1e-9) {
  const std::size_t n = tf.size();
  std::vector<double> centroid(tf.empty() ? 0 : tf[0].size(), 0.0);
  for (const auto& v : tf)
    for (std::size_t d = 0; d < v.size(); ++d) centroid[d] += v[d] / static_cast<double>(n);

  std::vector<OracleStep> steps;
  std::vector<bool> chosen(n, false);
  std::size_t total = 0;
  while (total < budget && steps.size() < n) {
    std::vector<double> score(n, -INFINITY);
    double best = -INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
      if (chosen[i]) continue;
      double red = 0.0;
      for (std::size_t s = 0; s < n; ++s)
        if (chosen[s]) red = std::max(red, oracle_cosine(tf[i], tf[s]));
      score[i] = lambda * oracle_cosine(tf[i], centroid) - (1 - lambda) * red;
      best = std::max(best, score[i]);
    }
    std::size_t pick = n;
    for (std::size_t i = 0; i < n && pick == n; ++i)
      if (!chosen[i] && score[i] >= best - tie) pick = i;
    chosen[pick] = true;
    total += words[pick];
    steps.push_back({pick, score[pick]});
  }
  return steps;
}

// Jensen-Shannon distance (base 2) over aligned probability vectors.
inline double oracle_jsd(const std::vector<double>& p, const std::vector<double>& q) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    if (p[i] > 0) d += 0.5 * p[i] * std::log2(p[i] / m);
    if (q[i] > 0) d += 0.5 * q[i] * std::log2(q[i] / m);
  }
  return std::sqrt(std::max(0.0, d));
}

}  // namespace augabex::testing
