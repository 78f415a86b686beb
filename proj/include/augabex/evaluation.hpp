// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "augabex/corpus.hpp"
#include "augabex/embedsim.hpp"
#include "augabex/lsa.hpp"
#include "augabex/rouge.hpp"
#include "augabex/structural.hpp"
#include "augabex/transform.hpp"

namespace augabex {

struct EvalContext {
  const StopwordSet* stopwords = nullptr;
  double alpha = 0.5;
  EntitySource entities = EntitySource::kPattern;
  const EmbeddingStore* embeddings = nullptr;  // optional
};

/// Scores of the OAG summary against its own document.
struct ReferenceMetrics {
  StructuralProfile profile;
  double kld_doc = 0.0;
  std::optional<double> lsa_doc;
  std::optional<double> embed_doc;
  std::size_t lent_cnt = 0;
};

/// Scores of an extractive system summary (TEG or LSA baseline).
struct SystemMetrics {
  StructuralProfile profile;
  RougeScore rouge1, rouge2, rougeL;  // against the OAG summary
  double jsd = 0.0;                   // against the OAG summary
  double kld_doc = 0.0;
  std::optional<double> lsa_pair;  // latent-space similarity to the OAG summary
  std::optional<double> lsa_doc;
  std::optional<double> embed_pair;
  std::optional<double> embed_doc;
  std::size_t lent_cnt = 0;
  std::optional<double> prov_recall;
};

struct InstanceEvaluation {
  std::string id;
  std::string dataset;
  ReferenceMetrics oag;
  SystemMetrics system;
};

/// Runs the whole metric battery for one record and one system summary.
/// `system_part` names the summary in the embedding store ("teg", "lsa").
InstanceEvaluation evaluate_instance(const CaseRecord& record, const SegmentedText& doc, const SegmentedText& oag,
                                     const ExtractiveSummary& summary, const std::string& system_part,
                                     const EvalContext& ctx);

/// Rebuilds an ExtractiveSummary from stored sentence indices; throws
/// ValidationError when an index is out of range.
ExtractiveSummary summary_from_indices(const SegmentedText& doc, const std::vector<std::size_t>& indices);

}  // namespace augabex
