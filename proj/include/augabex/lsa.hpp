// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <filesystem>
#include <string>
#include <unordered_set>
#include <vector>

#include <Eigen/Dense>

#include "augabex/corpus.hpp"
#include "augabex/transform.hpp"

namespace augabex {

using StopwordSet = std::unordered_set<std::string>;

/// Bundled English stopword list.
const StopwordSet& default_stopwords();
/// One term per line; blank lines and lines starting with '#' are skipped.
StopwordSet load_stopwords(const std::filesystem::path& path);

struct TopicDecomposition {
  std::vector<std::string> vocab;
  Eigen::VectorXd singular_values;  // all of them, descending
  std::size_t retained = 0;         // topics with sigma_i >= 0.5 * sigma_1
  Eigen::MatrixXd term_topics;      // |vocab| x retained
  Eigen::MatrixXd sentence_topics;  // retained x #sentences
};

/// Thin SVD of the term-sentence frequency matrix over the non-stopword
/// vocabulary (sorted). Throws when every token is a stopword.
TopicDecomposition decompose(const SegmentedText& text, const StopwordSet& stopwords);

/// Same, over a caller-supplied vocabulary; tokens outside it are ignored.
TopicDecomposition decompose_over(const SegmentedText& text, const std::vector<std::string>& vocab);

/// Singular values of an arbitrary dense matrix, descending.
Eigen::VectorXd singular_values(const Eigen::MatrixXd& m);

/// Per-sentence length score sqrt(sum_i (sigma_i * v_ij)^2) over the retained
/// topics.
std::vector<double> lsa_sentence_scores(const TopicDecomposition& d);

/// Picks sentences by descending topic score until `budget` words are
/// reached (the last pick may overshoot); output in document order.
ExtractiveSummary lsa_summarize(const SegmentedText& doc, std::size_t budget, const StopwordSet& stopwords);

/// |cos| between the main-topic term vectors of the two texts, both
/// decomposed over the union of their non-stopword vocabularies.
double lsa_similarity(const SegmentedText& a, const SegmentedText& b, const StopwordSet& stopwords);

}  // namespace augabex
