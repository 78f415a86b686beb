// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <cctype>
#include <unordered_set>

#include "augabex/corpus.hpp"
#include "augabex/text_util.hpp"

namespace augabex {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

const std::unordered_set<std::string>& abbreviation_set() {
  static const std::unordered_set<std::string> set = [] {
    std::unordered_set<std::string> s;
    for (const auto& a : sentence_abbreviations()) s.insert(a);
    return s;
  }();
  return set;
}

// Length of a closing quote/bracket at `pos` (ASCII or UTF-8 right quotes), or 0.
std::size_t closer_length(std::string_view text, std::size_t pos) {
  const char c = text[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  if (pos + 2 < text.size() && static_cast<unsigned char>(c) == 0xE2 &&
      static_cast<unsigned char>(text[pos + 1]) == 0x80) {
    const auto third = static_cast<unsigned char>(text[pos + 2]);
    if (third == 0x99 || third == 0x9D) return 3;
  }
  return 0;
}

// The whitespace-delimited word that ends right before `dot`, with leading
// opening punctuation stripped, lowercased.
std::string word_before(std::string_view text, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0 && !is_space(text[b - 1])) --b;
  while (b < dot && (text[b] == '(' || text[b] == '"' || text[b] == '\'' || text[b] == '[')) ++b;
  return to_lower_ascii(text.substr(b, dot - b));
}

bool is_abbreviation(std::string_view text, std::size_t dot) {
  const std::string word = word_before(text, dot);
  if (word.empty()) return false;
  if (word.size() == 1 && std::isalpha(static_cast<unsigned char>(word[0]))) return true;
  return abbreviation_set().contains(word);
}

// True when a blank line starts at the newline at `pos`.
bool blank_line_at(std::string_view text, std::size_t pos) {
  std::size_t j = pos + 1;
  while (j < text.size() && text[j] != '\n' && is_space(text[j])) ++j;
  return j < text.size() && text[j] == '\n';
}

}  // namespace

const std::vector<std::string>& sentence_abbreviations() {
  static const std::vector<std::string> list = {
      "no",   "nos",  "vs",   "v",    "rs",    "sec",  "secs",  "ss",   "art",  "arts",
      "dr",   "mr",   "mrs",  "ms",   "ors",   "anr",  "hon'ble", "hon", "cl",  "ltd",
      "co",   "pvt",  "st",   "jr",   "sr",    "viz",  "i.e",   "e.g",  "cf",   "govt",
      "ch",   "vol",  "para", "paras", "pp",   "p",    "reg",   "regn", "cr",   "crl",
      "civ",  "misc", "inc",  "bros", "supp",  "ed",   "sl",    "smt",  "shri", "sh",
      "kum",  "prof", "addl", "asst", "dy",    "jt",   "id",    "ld",   "retd", "approx",
      "corpn", "dept", "deptt", "distt", "admn", "u/s", "w.e.f", "r/w",
  };
  return list;
}

SegmentedText segment(std::string_view text) {
  SegmentedText out;
  auto emit = [&](std::size_t begin, std::size_t end) {
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    if (begin == end) return;
    Sentence s;
    s.raw = std::string(text.substr(begin, end - begin));
    s.tokens = tokenize(s.raw);
    if (s.tokens.empty()) return;
    s.index = out.sentences.size();
    s.begin = begin;
    s.end = end;
    out.word_count += s.tokens.size();
    out.sentences.push_back(std::move(s));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n' && blank_line_at(text, i)) {
      emit(start, i);
      start = i + 1;
      ++i;
      continue;
    }
    if (c == '.' || c == '?' || c == '!') {
      std::size_t j = i + 1;
      while (j < text.size()) {
        const std::size_t len = closer_length(text, j);
        if (len == 0) break;
        j += len;
      }
      if (j < text.size() && is_space(text[j])) {
        std::size_t k = j;
        while (k < text.size() && is_space(text[k])) ++k;
        const bool next_starts = k < text.size() && (is_upper(text[k]) || is_digit(text[k]));
        if (next_starts && !(c == '.' && is_abbreviation(text, i))) {
          emit(start, j);
          start = j;
          i = j;
          continue;
        }
      }
    }
    ++i;
  }
  emit(start, text.size());
  return out;
}

SegmentedText subset(const SegmentedText& text, const std::vector<std::size_t>& indices) {
  SegmentedText out;
  for (std::size_t idx : indices) {
    Sentence s = text.sentences.at(idx);
    s.index = out.sentences.size();
    out.word_count += s.tokens.size();
    out.sentences.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> SegmentedText::all_tokens() const {
  std::vector<std::string> all;
  all.reserve(word_count);
  for (const auto& s : sentences) all.insert(all.end(), s.tokens.begin(), s.tokens.end());
  return all;
}

std::string SegmentedText::joined() const {
  std::string out;
  for (const auto& s : sentences) {
    if (!out.empty()) out += ' ';
    out += s.raw;
  }
  return out;
}

}  // namespace augabex
