// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <algorithm>
#include <exception>
#include <set>
#include <unordered_map>

#include "augabex/error.hpp"
#include "augabex/parallel.hpp"
#include "augabex/rouge.hpp"
#include "augabex/simd.hpp"
#include "augabex/transform.hpp"

namespace augabex {

void PipelineConfig::validate() const {
  if (k < 1) throw ValidationError("k must be >= 1");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ValidationError("lambda must lie in [0, 1]");
}

namespace {

// Indices of the `k` best scores; ties within kTieEpsilon go to the lower index.
std::vector<std::size_t> top_k(const std::vector<double>& scores, std::size_t k) {
  std::vector<std::size_t> picked;
  std::vector<bool> taken(scores.size(), false);
  const std::size_t want = std::min(k, scores.size());
  while (picked.size() < want) {
    std::size_t best = scores.size();
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (taken[i]) continue;
      if (best == scores.size() || scores[i] > scores[best] + kTieEpsilon) best = i;
    }
    taken[best] = true;
    picked.push_back(best);
  }
  return picked;
}

}  // namespace

CandidateSet make_candidate_set(const SegmentedText& doc, const std::vector<std::size_t>& doc_indices) {
  CandidateSet set;
  std::set<std::string> vocab;
  for (std::size_t idx : doc_indices) {
    const Sentence& s = doc.sentences.at(idx);
    vocab.insert(s.tokens.begin(), s.tokens.end());
  }
  set.vocab.assign(vocab.begin(), vocab.end());
  std::unordered_map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < set.vocab.size(); ++i) column.emplace(set.vocab[i], i);

  for (std::size_t idx : doc_indices) {
    const Sentence& s = doc.sentences.at(idx);
    Candidate c;
    c.doc_index = idx;
    c.raw = s.raw;
    c.word_count = s.tokens.size();
    c.tf.assign(set.vocab.size(), 0.0);
    for (const auto& t : s.tokens) c.tf[column.at(t)] += 1.0;
    set.members.push_back(std::move(c));
  }
  return set;
}

CandidateSet select_candidates(const SegmentedText& doc, const SegmentedText& oag, std::size_t k) {
  if (doc.empty() || oag.empty()) throw ValidationError("select_candidates: empty document or summary");
  if (k < 1) throw ValidationError("select_candidates: k must be >= 1");

  TokenInterner interner;
  std::vector<std::vector<TokenId>> doc_ids, oag_ids;
  for (const auto& s : doc.sentences) doc_ids.push_back(interner.intern_all(s.tokens));
  for (const auto& s : oag.sentences) oag_ids.push_back(interner.intern_all(s.tokens));

  std::map<std::size_t, std::vector<RankedSentence>> provenance;
  std::vector<std::size_t> order;
  std::vector<bool> seen(doc.size(), false);
  std::vector<double> scores(doc.size());
  for (std::size_t j = 0; j < oag.size(); ++j) {
    for (std::size_t i = 0; i < doc.size(); ++i) scores[i] = avg_rouge_ids(doc_ids[i], oag_ids[j]);
    auto& ranked = provenance[j];
    for (std::size_t idx : top_k(scores, k)) {
      ranked.push_back({idx, scores[idx]});
      if (!seen[idx]) {
        seen[idx] = true;
        order.push_back(idx);
      }
    }
  }
  CandidateSet set = make_candidate_set(doc, order);
  set.provenance = std::move(provenance);
  return set;
}

ExtractiveSummary mmr_select(const CandidateSet& candidates, double lambda, std::size_t budget) {
  if (candidates.members.empty()) throw ValidationError("mmr_select: empty candidate set");
  if (budget < 1) throw ValidationError("mmr_select: budget must be >= 1");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ValidationError("mmr_select: lambda must lie in [0, 1]");

  // Visit candidates in document order so that the first of several tied
  // scores is the one with the lowest document index.
  std::vector<const Candidate*> pool;
  for (const auto& c : candidates.members) pool.push_back(&c);
  std::sort(pool.begin(), pool.end(),
            [](const Candidate* a, const Candidate* b) { return a->doc_index < b->doc_index; });

  const std::size_t dim = candidates.vocab.size();
  // Cosine is scale-free, so the summed vector stands in for the mean.
  std::vector<double> centroid(dim, 0.0);
  for (const Candidate* c : pool) simd::accumulate(centroid, c->tf);

  const std::size_t n = pool.size();
  std::vector<double> relevance(n), redundancy(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) relevance[i] = simd::cosine(pool[i]->tf, centroid);

  ExtractiveSummary out;
  std::vector<bool> taken(n, false);
  std::size_t words = 0;
  while (words < budget && out.trace.size() < n) {
    std::size_t best = n;
    double best_score = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      const double score = lambda * relevance[i] - (1.0 - lambda) * redundancy[i];
      if (best == n || score > best_score + kTieEpsilon) {
        best = i;
        best_score = score;
      }
    }
    taken[best] = true;
    words += pool[best]->word_count;
    out.trace.push_back({pool[best]->doc_index, best_score});
    for (std::size_t i = 0; i < n; ++i) {
      if (!taken[i]) redundancy[i] = std::max(redundancy[i], simd::cosine(pool[i]->tf, pool[best]->tf));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!taken[i]) continue;
    out.selected.push_back(pool[i]->doc_index);
    if (!out.text.empty()) out.text += ' ';
    out.text += pool[i]->raw;
  }
  out.word_count = words;
  return out;
}

ExtractiveSummary transform_segmented(const SegmentedText& doc, const SegmentedText& oag,
                                      const PipelineConfig& cfg) {
  cfg.validate();
  if (doc.empty()) throw ValidationError("transform: document has no sentences");
  if (oag.empty()) throw ValidationError("transform: summary has no sentences");
  return mmr_select(select_candidates(doc, oag, cfg.k), cfg.lambda, oag.word_count);
}

ExtractiveSummary transform_summary(const CaseRecord& record, const PipelineConfig& cfg) {
  try {
    return transform_segmented(segment(record.doc_text), segment(record.oag_text), cfg);
  } catch (const ValidationError& e) {
    throw ValidationError("record \"" + record.id + "\": " + e.what());
  }
}

SummaryEntities summary_entities(const CaseRecord& record, const SegmentedText& doc,
                                 const ExtractiveSummary& summary, EntitySource source) {
  SummaryEntities out;
  if (source == EntitySource::kPattern) {
    out.oag = extract_pattern_entities(record.oag_text);
    out.extract = extract_pattern_entities(summary.text);
    return out;
  }
  if (!record.entities_doc || !record.entities_oag)
    throw ValidationError("record \"" + record.id + "\": annotation entities need both entities_doc and entities_summary");
  out.oag = *record.entities_oag;
  for (const auto& e : *record.entities_doc) {
    bool inside = false;
    if (e.span) {
      for (std::size_t idx : summary.selected) {
        const Sentence& s = doc.sentences.at(idx);
        if (e.span->start >= s.begin && e.span->end <= s.end) {
          inside = true;
          break;
        }
      }
    } else {
      inside = summary.text.find(e.surface) != std::string::npos;
    }
    if (inside) out.extract.push_back(e);
  }
  return out;
}

std::vector<SweepRow> sweep_k(const std::vector<CaseRecord>& records, const std::vector<std::size_t>& k_values,
                              const PipelineConfig& cfg, EntitySource source, std::size_t workers) {
  if (k_values.empty()) throw ValidationError("sweep_k: no k values");
  for (std::size_t k : k_values)
    if (k < 1) throw ValidationError("sweep_k: k values must be >= 1");

  const std::size_t n = records.size();
  std::vector<SegmentedText> docs(n), oags(n);
  parallel_for(n, workers, [&](std::size_t i) {
    docs[i] = segment(records[i].doc_text);
    oags[i] = segment(records[i].oag_text);
  });

  std::vector<SweepRow> rows;
  for (std::size_t k : k_values) {
    PipelineConfig run = cfg;
    run.k = k;
    std::vector<std::optional<double>> recalls(n);
    std::vector<std::exception_ptr> errors(n);
    parallel_for(n, workers, [&](std::size_t i) {
      try {
        const ExtractiveSummary teg = transform_segmented(docs[i], oags[i], run);
        const SummaryEntities ents = summary_entities(records[i], docs[i], teg, source);
        recalls[i] = prov_recall(ents.oag, ents.extract);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);

    SweepRow row;
    row.k = k;
    double sum = 0.0;
    for (const auto& r : recalls) {
      if (!r) continue;
      sum += *r;
      ++row.n_defined;
    }
    if (row.n_defined > 0) row.prov_recall = sum / static_cast<double>(row.n_defined);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace augabex
