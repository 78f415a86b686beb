// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <gtest/gtest.h>

#include "augabex/corpus.hpp"
#include "augabex/error.hpp"
#include "augabex/structural.hpp"
#include "generators.hpp"

namespace augabex {
namespace {

TEST(Syllables, VowelGroupHeuristic) {
  EXPECT_EQ(count_syllables("cat"), 1);
  EXPECT_EQ(count_syllables("case"), 1);
  EXPECT_EQ(count_syllables("b"), 1);
  EXPECT_EQ(count_syllables("the"), 1);
  EXPECT_EQ(count_syllables("appeal"), 2);
  EXPECT_EQ(count_syllables("tribunal"), 3);
  EXPECT_EQ(count_syllables("constitution"), 4);
  EXPECT_EQ(count_syllables("rhythm"), 1);
  EXPECT_EQ(count_syllables("302"), 1);
}

TEST(FkScore, SingleWord) {
  EXPECT_NEAR(fk_score(segment("Cat.")), 121.22, 1e-9);
}

TEST(FkScore, NegativeScoresAreKept) {
  // one 30-word sentence of four-syllable words
  std::string text = "Constitution";
  for (int i = 1; i < 30; ++i) text += " constitution";
  const double fk = fk_score(segment(text + "."));
  EXPECT_NEAR(fk, 206.835 - 1.015 * 30 - 84.6 * 4, 1e-9);
  EXPECT_LT(fk, 0.0);
}

TEST(FkScore, EmptyIsError) {
  EXPECT_THROW(fk_score(segment("")), ValidationError);
  EXPECT_THROW(structural_profile(segment(" ")), ValidationError);
}

TEST(Profile, Arithmetic) {
  const StructuralProfile p = structural_profile(segment("The appeal fails. The trial court erred in law."));
  EXPECT_EQ(p.word_count, 9u);
  EXPECT_EQ(p.n_sentences, 2u);
  EXPECT_DOUBLE_EQ(p.avg_sentence_len, 4.5);
  const StructuralProfile q = structural_profile(segment("Two words. Three more words."));
  EXPECT_EQ(q.word_count, 5u);
  EXPECT_DOUBLE_EQ(q.avg_sentence_len, 2.5);
}

TEST(Profile, MiniCorpusRecordSnapshot) {
  const auto recs = load_corpus(AUGABEX_SOURCE_DIR "/data/mini_corpus.jsonl");
  const StructuralProfile p = structural_profile(segment(recs.at(0).oag_text));
  EXPECT_EQ(p.word_count, 45u);
  EXPECT_EQ(p.n_sentences, 3u);
  EXPECT_NEAR(p.avg_sentence_len, 15.0, 1e-12);
  EXPECT_NEAR(p.fk_score, 46.85, 1e-9);
}

TEST(Profile, OrderAndDuplicationInvariance) {
  testing::Gen gen(8);
  for (int iter = 0; iter < 200; ++iter) {
    const SegmentedText t = segment(gen.text(gen.size(1, 8), 1, 12, testing::legal_words()));
    std::vector<std::size_t> perm(t.size()), twice;
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), gen.engine());
    for (int r = 0; r < 2; ++r) twice.insert(twice.end(), perm.begin(), perm.end());
    const StructuralProfile a = structural_profile(t), b = structural_profile(subset(t, perm)),
                            c = structural_profile(subset(t, twice));
    ASSERT_NEAR(a.fk_score, b.fk_score, 1e-9);
    ASSERT_NEAR(a.fk_score, c.fk_score, 1e-9);
    ASSERT_DOUBLE_EQ(a.avg_sentence_len, c.avg_sentence_len);
    ASSERT_EQ(2 * a.word_count, c.word_count);
  }
}

TEST(FkScore, DecreasesWithLongerWordsAndSentences) {
  // same sentence structure, longer words
  EXPECT_GT(fk_score(segment("The cat sat. The dog ran.")), fk_score(segment("The tribunal sat. The dog ran.")));
  // same words per syllable, longer sentences
  EXPECT_GT(fk_score(segment("Cat sat. Dog ran.")), fk_score(segment("Cat sat dog ran.")));
}

}  // namespace
}  // namespace augabex
