// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <fstream>

#include "augabex/error.hpp"
#include "augabex/lsa.hpp"
#include "augabex/text_util.hpp"

namespace augabex {

const StopwordSet& default_stopwords() {
  static const StopwordSet words = {
      "a", "about", "above", "after", "again", "against", "all", "also", "am", "an", "and", "any",
      "are", "as", "at", "be", "because", "been", "before", "being", "below", "between", "both",
      "but", "by", "can", "could", "did", "do", "does", "doing", "down", "during", "each", "either",
      "else", "few", "for", "from", "further", "had", "has", "have", "having", "he", "her", "here",
      "hers", "herself", "him", "himself", "his", "how", "however", "i", "if", "in", "into", "is",
      "it", "its", "itself", "just", "may", "me", "might", "more", "most", "must", "my", "myself",
      "neither", "no", "nor", "not", "now", "of", "off", "on", "once", "only", "or", "other", "our",
      "ours", "ourselves", "out", "over", "own", "same", "shall", "she", "should", "so", "some",
      "such", "than", "that", "the", "their", "theirs", "them", "themselves", "then", "there",
      "thereby", "therefore", "these", "they", "this", "those", "through", "thus", "to", "too",
      "under", "until", "up", "upon", "very", "was", "we", "were", "what", "when", "where",
      "whereas", "whether", "which", "while", "who", "whom", "whose", "why", "will", "with",
      "within", "without", "would", "yet", "you", "your", "yours", "yourself", "yourselves",
  };
  return words;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stopword file " + path.string());
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    words.insert(to_lower_ascii(std::string_view(line).substr(b, e - b + 1)));
  }
  return words;
}

}  // namespace augabex
