// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "augabex/corpus.hpp"

namespace augabex {

struct PipelineConfig {
  std::size_t k = 2;
  double lambda = 0.5;
  // The length budget is always the OAG word count.

  void validate() const;
};

struct RankedSentence {
  std::size_t doc_index = 0;
  double score = 0.0;
};

struct Candidate {
  std::size_t doc_index = 0;
  std::string raw;
  std::size_t word_count = 0;
  /// Term frequencies over CandidateSet::vocab.
  std::vector<double> tf;
};

/// Stage-one output: the union of the top-k document sentences of every OAG
/// sentence.
struct CandidateSet {
  std::vector<std::string> vocab;  // sorted
  std::vector<Candidate> members;  // first-occurrence order
  /// OAG sentence index -> its top-k document sentences, best first.
  std::map<std::size_t, std::vector<RankedSentence>> provenance;
};

struct TraceStep {
  std::size_t doc_index = 0;
  double score = 0.0;
  bool operator==(const TraceStep&) const = default;
};

struct ExtractiveSummary {
  std::vector<std::size_t> selected;  // document order
  std::string text;
  std::size_t word_count = 0;
  std::vector<TraceStep> trace;  // pick order
};

/// Scores equal within this margin count as ties; the lower document index
/// then wins.
inline constexpr double kTieEpsilon = 1e-12;

CandidateSet select_candidates(const SegmentedText& doc, const SegmentedText& oag, std::size_t k);

/// Builds a CandidateSet (vocab + TF vectors) from chosen document sentences.
/// Provenance is left empty.
CandidateSet make_candidate_set(const SegmentedText& doc, const std::vector<std::size_t>& doc_indices);

/// Greedy maximal-marginal-relevance selection over the candidate pool.
///
/// At each step every unselected candidate c scores
///   lambda * cos(c, centroid) - (1 - lambda) * max_{s selected} cos(c, s)
/// and the best one is added. Selection stops once the selected word count
/// reaches `budget` (so the last pick may overshoot) or the pool runs out.
ExtractiveSummary mmr_select(const CandidateSet& candidates, double lambda, std::size_t budget);

ExtractiveSummary transform_summary(const CaseRecord& record, const PipelineConfig& cfg);

/// Same as transform_summary, reusing already segmented texts.
ExtractiveSummary transform_segmented(const SegmentedText& doc, const SegmentedText& oag,
                                      const PipelineConfig& cfg);

enum class EntitySource { kPattern, kAnnotations };

/// Entities of the OAG summary and of an extracted summary, taken either from
/// the pattern extractor or from the record's imported annotations. Imported
/// document annotations are attributed to the extracted summary when their
/// span lies inside a selected sentence, or, when they carry no span, when
/// their surface occurs in the summary text.
struct SummaryEntities {
  std::vector<EntityAnnotation> oag;
  std::vector<EntityAnnotation> extract;
};

SummaryEntities summary_entities(const CaseRecord& record, const SegmentedText& doc,
                                 const ExtractiveSummary& summary, EntitySource source);

struct SweepRow {
  std::size_t k = 0;
  std::optional<double> prov_recall;  // nullopt when no record has OAG provisions
  std::size_t n_defined = 0;
};

std::vector<SweepRow> sweep_k(const std::vector<CaseRecord>& records, const std::vector<std::size_t>& k_values,
                              const PipelineConfig& cfg, EntitySource source = EntitySource::kPattern,
                              std::size_t workers = 1);

}  // namespace augabex
