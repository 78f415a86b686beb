// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "augabex/entities.hpp"

namespace augabex {

/// One judgment and its abstractive gold summary.
struct CaseRecord {
  std::string id;
  std::string dataset;
  std::string doc_text;
  std::string oag_text;
  std::optional<std::vector<EntityAnnotation>> entities_doc;
  std::optional<std::vector<EntityAnnotation>> entities_oag;
};

struct Sentence {
  std::size_t index = 0;
  std::string raw;
  std::vector<std::string> tokens;
  // Byte range of `raw` inside the segmented text.
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct SegmentedText {
  std::vector<Sentence> sentences;
  std::size_t word_count = 0;

  bool empty() const { return sentences.empty(); }
  std::size_t size() const { return sentences.size(); }
  /// All tokens, sentence after sentence.
  std::vector<std::string> all_tokens() const;
  /// Raw sentences joined with single spaces.
  std::string joined() const;
};

/// Rule-based sentence splitter and tokenizer.
///
/// A sentence ends at '.', '?' or '!' (optionally followed by closing quotes
/// or brackets) when whitespace and then an uppercase letter or digit follow,
/// unless the word carrying the '.' is a known abbreviation ("Sec.", "v.",
/// "Hon'ble.", single-letter initials, ...). A blank line always ends a
/// sentence. Tokens are maximal ASCII alphanumeric runs, lowercased. Sentences
/// without tokens are dropped and the remaining ones re-indexed from 0.
SegmentedText segment(std::string_view text);

/// Builds a SegmentedText from a subset of another one's sentences, keeping
/// their order and re-indexing from 0.
SegmentedText subset(const SegmentedText& text, const std::vector<std::size_t>& indices);

/// Abbreviations that never end a sentence (compared case-insensitively,
/// without the trailing period).
const std::vector<std::string>& sentence_abbreviations();

std::vector<CaseRecord> load_corpus(const std::filesystem::path& path);
std::vector<CaseRecord> read_corpus(std::istream& in);

struct CorpusStats {
  std::size_t n_docs = 0;
  double avg_wc_doc = 0.0;
  double avg_wc_sum = 0.0;
  double avg_sc_doc = 0.0;
  double avg_sc_sum = 0.0;
  double avg_cr = 0.0;
};

CorpusStats corpus_stats(const std::vector<CaseRecord>& records);

/// corpus_stats per dataset tag, keyed and ordered by tag.
std::map<std::string, CorpusStats> corpus_stats_by_dataset(const std::vector<CaseRecord>& records);

}  // namespace augabex
