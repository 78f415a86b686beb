// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <cctype>

#include "augabex/error.hpp"
#include "augabex/structural.hpp"

namespace augabex {
namespace {
bool is_vowel(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y': return true;
    default: return false;
  }
}
}  // namespace

int count_syllables(std::string_view word) {
  int groups = 0;
  bool in_group = false;
  for (char c : word) {
    const bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  if (!word.empty() && std::tolower(static_cast<unsigned char>(word.back())) == 'e' && groups > 1) --groups;
  return groups < 1 ? 1 : groups;
}

double fk_score(const SegmentedText& text) {
  if (text.empty() || text.word_count == 0) throw ValidationError("fk_score: empty text");
  long syllables = 0;
  for (const auto& s : text.sentences)
    for (const auto& t : s.tokens) syllables += count_syllables(t);
  const auto words = static_cast<double>(text.word_count);
  const double asl = words / static_cast<double>(text.size());
  const double asw = static_cast<double>(syllables) / words;
  return 206.835 - 1.015 * asl - 84.6 * asw;
}

StructuralProfile structural_profile(const SegmentedText& text) {
  StructuralProfile p;
  p.fk_score = fk_score(text);
  p.word_count = text.word_count;
  p.n_sentences = text.size();
  p.avg_sentence_len = static_cast<double>(p.word_count) / static_cast<double>(p.n_sentences);
  return p;
}

}  // namespace augabex
