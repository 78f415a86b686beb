// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <cstddef>
#include <string_view>

#include "augabex/corpus.hpp"

namespace augabex {

struct StructuralProfile {
  std::size_t word_count = 0;
  std::size_t n_sentences = 0;
  double avg_sentence_len = 0.0;
  double fk_score = 0.0;
};

/// Vowel-group syllable heuristic: runs of a/e/i/o/u/y, minus one for a
/// terminal silent "e" when at least one group remains; never below 1.
int count_syllables(std::string_view word);

/// Flesch reading ease, 206.835 - 1.015 * ASL - 84.6 * ASW. Not clamped;
/// long sentences of long words give negative scores.
double fk_score(const SegmentedText& text);

StructuralProfile structural_profile(const SegmentedText& text);

}  // namespace augabex
