// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <gtest/gtest.h>

#include "augabex/corpus.hpp"
#include "augabex/text_util.hpp"
#include "generators.hpp"

namespace augabex {
namespace {

using Tokens = std::vector<std::string>;

TEST(Segment, TwoPlainSentences) {
  const SegmentedText s = segment("The appeal fails. Costs follow.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.sentences[0].tokens, (Tokens{"the", "appeal", "fails"}));
  EXPECT_EQ(s.sentences[1].tokens, (Tokens{"costs", "follow"}));
  EXPECT_EQ(s.sentences[1].index, 1u);
  EXPECT_EQ(s.word_count, 5u);
}

TEST(Segment, NoSplitAfterAbbreviation) {
  const SegmentedText s = segment("See Sec. 302 IPC. He appealed.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.sentences[0].raw, "See Sec. 302 IPC.");
  EXPECT_EQ(s.sentences[1].raw, "He appealed.");
}

TEST(Segment, LegalAbbreviations) {
  const SegmentedText s = segment(
      "State of U.P. vs. Ram Singh was cited. The petitioner paid Rs. 500 to Dr. Rao and Ors. No. 4 was absent.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.sentences[1].raw, "The petitioner paid Rs. 500 to Dr. Rao and Ors. No. 4 was absent.");
}

TEST(Segment, EmptyAndWhitespaceInput) {
  EXPECT_TRUE(segment("").empty());
  EXPECT_EQ(segment("").word_count, 0u);
  EXPECT_TRUE(segment("   \n\n\t ").empty());
}

TEST(Segment, BlankLineEndsSentence) {
  const SegmentedText s = segment("ORDER\n\nthe appeal is allowed");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.sentences[0].raw, "ORDER");
  EXPECT_EQ(s.sentences[1].raw, "the appeal is allowed");
}

TEST(Segment, LowercaseContinuationDoesNotSplit) {
  EXPECT_EQ(segment("It was held in para. 5. it follows.").size(), 1u);
  EXPECT_EQ(segment("The sum was 5.5 lakhs. Costs follow.").size(), 2u);
}

TEST(Segment, DigitStartsNewSentence) {
  EXPECT_EQ(segment("The appeal fails. 2. Costs follow.").size(), 3u);
}

TEST(Segment, PunctuationOnlySentencesAreDropped) {
  const SegmentedText s = segment("First point. ... ! Second point.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.sentences[0].index, 0u);
  EXPECT_EQ(s.sentences[1].index, 1u);
}

TEST(Segment, OffsetsPointIntoSource) {
  const std::string text = "  The appeal fails.   Costs follow.  ";
  for (const auto& s : segment(text).sentences) EXPECT_EQ(text.substr(s.begin, s.end - s.begin), s.raw);
}

TEST(Segment, Subset) {
  const SegmentedText s = segment("One alpha. Two beta. Three gamma.");
  const SegmentedText sub = subset(s, {2, 0});
  ASSERT_EQ(sub.size(), 2u);
  EXPECT_EQ(sub.sentences[0].raw, "Three gamma.");
  EXPECT_EQ(sub.sentences[1].index, 1u);
  EXPECT_EQ(sub.word_count, 4u);
}

// Property: segmentation is deterministic, indices are contiguous, word count
// adds up and the token stream equals tokenizing the whole text.
TEST(Segment, PropertiesOnGeneratedText) {
  testing::Gen gen(11);
  const std::vector<std::string> extra = {"Sec.", "Art.", "vs.", "No.", "5.", "(a).", "Mr.", "\n\n", "?", "!"};
  for (int iter = 0; iter < 300; ++iter) {
    std::string text;
    const std::size_t n = gen.size(0, 40);
    for (std::size_t i = 0; i < n; ++i) {
      if (i) text += ' ';
      text += gen.coin(0.25) ? extra[gen.size(0, extra.size() - 1)]
                             : testing::legal_words()[gen.size(0, testing::legal_words().size() - 1)];
      if (gen.coin(0.2)) text += '.';
      if (gen.coin(0.1)) text[text.size() - 1] = static_cast<char>(std::toupper(text.back()));
    }
    const SegmentedText a = segment(text), b = segment(text);
    ASSERT_EQ(a.size(), b.size());
    std::size_t words = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Sentence& s = a.sentences[i];
      ASSERT_EQ(s.index, i);
      ASSERT_FALSE(s.tokens.empty());
      ASSERT_EQ(s.raw, b.sentences[i].raw);
      ASSERT_EQ(s.tokens, tokenize(s.raw));
      words += s.tokens.size();
      // every token is a contiguous alphanumeric run of the raw sentence
      const std::string lower = to_lower_ascii(s.raw);
      for (const auto& t : s.tokens) ASSERT_NE(lower.find(t), std::string::npos);
    }
    ASSERT_EQ(words, a.word_count);
    ASSERT_EQ(a.all_tokens(), tokenize(text)) << text;
  }
}

}  // namespace
}  // namespace augabex
