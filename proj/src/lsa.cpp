// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include <Eigen/SVD>

#include "augabex/error.hpp"
#include "augabex/lsa.hpp"
#include "augabex/simd.hpp"

namespace augabex {
namespace {

constexpr double kTopicRetention = 0.5;

std::vector<std::string> content_vocab(const SegmentedText& text, const StopwordSet& stopwords) {
  std::set<std::string> v;
  for (const auto& s : text.sentences)
    for (const auto& t : s.tokens)
      if (!stopwords.contains(t)) v.insert(t);
  return {v.begin(), v.end()};
}

Eigen::MatrixXd term_sentence_matrix(const SegmentedText& text, const std::vector<std::string>& vocab) {
  std::unordered_map<std::string, Eigen::Index> row;
  for (std::size_t i = 0; i < vocab.size(); ++i) row.emplace(vocab[i], static_cast<Eigen::Index>(i));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(vocab.size()),
                                            static_cast<Eigen::Index>(text.size()));
  for (std::size_t j = 0; j < text.size(); ++j) {
    for (const auto& t : text.sentences[j].tokens) {
      if (auto it = row.find(t); it != row.end()) a(it->second, static_cast<Eigen::Index>(j)) += 1.0;
    }
  }
  return a;
}

}  // namespace

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues();
}

TopicDecomposition decompose_over(const SegmentedText& text, const std::vector<std::string>& vocab) {
  const Eigen::MatrixXd a = term_sentence_matrix(text, vocab);
  if (a.size() == 0 || a.isZero(0.0)) throw ValidationError("decompose: no content terms");
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);

  TopicDecomposition d;
  d.vocab = vocab;
  d.singular_values = svd.singularValues();
  const double top = d.singular_values(0);
  std::size_t r = 1;
  while (r < static_cast<std::size_t>(d.singular_values.size()) &&
         d.singular_values(static_cast<Eigen::Index>(r)) >= kTopicRetention * top)
    ++r;
  d.retained = r;
  const auto er = static_cast<Eigen::Index>(r);
  d.term_topics = svd.matrixU().leftCols(er);
  d.sentence_topics = svd.matrixV().leftCols(er).transpose();
  return d;
}

TopicDecomposition decompose(const SegmentedText& text, const StopwordSet& stopwords) {
  const auto vocab = content_vocab(text, stopwords);
  if (vocab.empty()) throw ValidationError("decompose: every token is a stopword");
  return decompose_over(text, vocab);
}

std::vector<double> lsa_sentence_scores(const TopicDecomposition& d) {
  std::vector<double> scores(static_cast<std::size_t>(d.sentence_topics.cols()), 0.0);
  for (Eigen::Index j = 0; j < d.sentence_topics.cols(); ++j) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < d.sentence_topics.rows(); ++i) {
      const double w = d.singular_values(i) * d.sentence_topics(i, j);
      sum += w * w;
    }
    scores[static_cast<std::size_t>(j)] = std::sqrt(sum);
  }
  return scores;
}

ExtractiveSummary lsa_summarize(const SegmentedText& doc, std::size_t budget, const StopwordSet& stopwords) {
  const auto scores = lsa_sentence_scores(decompose(doc, stopwords));
  // Ties within kTieEpsilon go to the lower sentence index.
  ExtractiveSummary out;
  std::vector<bool> taken(scores.size(), false);
  std::size_t words = 0;
  while (words < budget && out.trace.size() < scores.size()) {
    std::size_t best = scores.size();
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (taken[i]) continue;
      if (best == scores.size() || scores[i] > scores[best] + kTieEpsilon) best = i;
    }
    taken[best] = true;
    words += doc.sentences[best].tokens.size();
    out.trace.push_back({best, scores[best]});
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!taken[i]) continue;
    out.selected.push_back(i);
    if (!out.text.empty()) out.text += ' ';
    out.text += doc.sentences[i].raw;
  }
  out.word_count = words;
  return out;
}

double lsa_similarity(const SegmentedText& a, const SegmentedText& b, const StopwordSet& stopwords) {
  const auto va = content_vocab(a, stopwords);
  const auto vb = content_vocab(b, stopwords);
  if (va.empty() || vb.empty()) throw ValidationError("lsa_similarity: a text has only stopwords");
  std::vector<std::string> shared;
  std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));

  const TopicDecomposition da = decompose_over(a, shared);
  const TopicDecomposition db = decompose_over(b, shared);
  const Eigen::VectorXd ua = da.term_topics.col(0);
  const Eigen::VectorXd ub = db.term_topics.col(0);
  const std::span<const double> sa(ua.data(), static_cast<std::size_t>(ua.size()));
  const std::span<const double> sb(ub.data(), static_cast<std::size_t>(ub.size()));
  return std::min(1.0, std::abs(simd::cosine(sa, sb)));
}

}  // namespace augabex
