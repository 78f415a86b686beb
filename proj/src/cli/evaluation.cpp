// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <algorithm>

#include "augabex/entities.hpp"
#include "augabex/error.hpp"
#include "augabex/evaluation.hpp"
#include "augabex/lexical.hpp"

namespace augabex {
namespace {

std::optional<double> try_lsa(const SegmentedText& a, const SegmentedText& b, const StopwordSet& stopwords) {
  try {
    return lsa_similarity(a, b, stopwords);
  } catch (const ValidationError&) {
    return std::nullopt;  // one side has only stopwords
  }
}

std::optional<double> try_embed(const EmbeddingStore* store, const std::string& a, const std::string& b) {
  if (!store) return std::nullopt;
  return embed_cosine(*store, a, b);
}

}  // namespace

ExtractiveSummary summary_from_indices(const SegmentedText& doc, const std::vector<std::size_t>& indices) {
  ExtractiveSummary s;
  s.selected = indices;
  std::sort(s.selected.begin(), s.selected.end());
  if (std::adjacent_find(s.selected.begin(), s.selected.end()) != s.selected.end())
    throw ValidationError("summary lists a sentence index twice");
  for (std::size_t idx : s.selected) {
    if (idx >= doc.size())
      throw ValidationError("sentence index " + std::to_string(idx) + " out of range (document has " +
                            std::to_string(doc.size()) + " sentences)");
    if (!s.text.empty()) s.text += ' ';
    s.text += doc.sentences[idx].raw;
    s.word_count += doc.sentences[idx].tokens.size();
  }
  return s;
}

InstanceEvaluation evaluate_instance(const CaseRecord& record, const SegmentedText& doc, const SegmentedText& oag,
                                     const ExtractiveSummary& summary, const std::string& system_part,
                                     const EvalContext& ctx) {
  const StopwordSet& stopwords = ctx.stopwords ? *ctx.stopwords : default_stopwords();
  const SegmentedText sys = subset(doc, summary.selected);
  if (sys.empty()) throw ValidationError("record \"" + record.id + "\": empty system summary");

  InstanceEvaluation ev;
  ev.id = record.id;
  ev.dataset = record.dataset;

  const std::string doc_id = embedding_id(record.id, "doc");
  const std::string oag_id = embedding_id(record.id, "oag");
  const std::string sys_id = embedding_id(record.id, system_part);

  ev.oag.profile = structural_profile(oag);
  ev.oag.kld_doc = kld_texts(oag, doc, ctx.alpha);
  ev.oag.lsa_doc = try_lsa(oag, doc, stopwords);
  ev.oag.embed_doc = try_embed(ctx.embeddings, oag_id, doc_id);

  SystemMetrics& m = ev.system;
  m.profile = structural_profile(sys);
  const auto sys_tokens = sys.all_tokens();
  const auto oag_tokens = oag.all_tokens();
  m.rouge1 = rouge_n(sys_tokens, oag_tokens, 1);
  m.rouge2 = rouge_n(sys_tokens, oag_tokens, 2);
  m.rougeL = rouge_l(sys_tokens, oag_tokens);
  m.jsd = jsd_texts(oag, sys);
  m.kld_doc = kld_texts(sys, doc, ctx.alpha);
  m.lsa_pair = try_lsa(oag, sys, stopwords);
  m.lsa_doc = try_lsa(sys, doc, stopwords);
  m.embed_pair = try_embed(ctx.embeddings, oag_id, sys_id);
  m.embed_doc = try_embed(ctx.embeddings, sys_id, doc_id);

  const SummaryEntities ents = summary_entities(record, doc, summary, ctx.entities);
  ev.oag.lent_cnt = lent_cnt(ents.oag);
  m.lent_cnt = lent_cnt(ents.extract);
  m.prov_recall = prov_recall(ents.oag, ents.extract);
  return ev;
}

}  // namespace augabex
