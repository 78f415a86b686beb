// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "augabex/error.hpp"
#include "augabex/lexical.hpp"

namespace augabex {

TermDistribution term_distribution(const SegmentedText& text, const std::optional<std::vector<std::string>>& vocab) {
  if (text.word_count == 0) throw ValidationError("term_distribution: text has no tokens");
  TermDistribution d;
  if (vocab) {
    d.support = *vocab;
  } else {
    std::set<std::string> own;
    for (const auto& s : text.sentences) own.insert(s.tokens.begin(), s.tokens.end());
    d.support.assign(own.begin(), own.end());
  }
  std::unordered_map<std::string, std::size_t> column;
  column.reserve(d.support.size());
  for (std::size_t i = 0; i < d.support.size(); ++i) column.emplace(d.support[i], i);

  d.counts.assign(d.support.size(), 0.0);
  for (const auto& s : text.sentences) {
    for (const auto& t : s.tokens) {
      auto it = column.find(t);
      if (it == column.end()) throw ValidationError("term_distribution: term \"" + t + "\" not in vocabulary");
      d.counts[it->second] += 1.0;
    }
  }
  const auto total = static_cast<double>(text.word_count);
  d.probs.resize(d.counts.size());
  for (std::size_t i = 0; i < d.counts.size(); ++i) d.probs[i] = d.counts[i] / total;
  return d;
}

std::vector<std::string> union_vocabulary(std::initializer_list<const SegmentedText*> texts) {
  std::set<std::string> all;
  for (const SegmentedText* t : texts)
    for (const auto& s : t->sentences) all.insert(s.tokens.begin(), s.tokens.end());
  return {all.begin(), all.end()};
}

double jsd(const TermDistribution& p, const TermDistribution& q) {
  if (p.support != q.support) throw ValidationError("jsd: distributions have different supports");
  double div = 0.0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    const double a = p.probs[i];
    const double b = q.probs[i];
    const double m = 0.5 * (a + b);
    const double ta = a > 0.0 ? a * std::log2(a / m) : 0.0;
    const double tb = b > 0.0 ? b * std::log2(b / m) : 0.0;
    div += 0.5 * (ta + tb);  // one commutative add keeps jsd(p, q) == jsd(q, p) bit for bit
  }
  return std::sqrt(std::clamp(div, 0.0, 1.0));
}

double kld(const TermDistribution& summary_dist, const TermDistribution& doc_dist, double alpha) {
  if (!(alpha > 0.0)) throw ValidationError("kld: smoothing alpha must be > 0");
  if (summary_dist.support != doc_dist.support) throw ValidationError("kld: distributions have different supports");
  const auto v = static_cast<double>(summary_dist.support.size());
  double ns = 0.0, nd = 0.0;
  for (double c : summary_dist.counts) ns += c;
  for (double c : doc_dist.counts) nd += c;
  const double zs = ns + alpha * v;
  const double zd = nd + alpha * v;
  double d = 0.0;
  for (std::size_t i = 0; i < summary_dist.counts.size(); ++i) {
    const double p = (summary_dist.counts[i] + alpha) / zs;
    const double q = (doc_dist.counts[i] + alpha) / zd;
    d += p * std::log(p / q);
  }
  return std::max(d, 0.0);
}

double jsd_texts(const SegmentedText& a, const SegmentedText& b) {
  const auto vocab = union_vocabulary({&a, &b});
  return jsd(term_distribution(a, vocab), term_distribution(b, vocab));
}

double kld_texts(const SegmentedText& summary, const SegmentedText& doc, double alpha) {
  const auto vocab = union_vocabulary({&summary, &doc});
  return kld(term_distribution(summary, vocab), term_distribution(doc, vocab), alpha);
}

}  // namespace augabex
