// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include "augabex/text_util.hpp"

namespace augabex {
namespace {
bool is_alnum_ascii(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}
char lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }
}  // namespace

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = lower(c);
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_alnum_ascii(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && is_alnum_ascii(text[j])) ++j;
    tokens.push_back(to_lower_ascii(text.substr(i, j - i)));
    i = j;
  }
  return tokens;
}

}  // namespace augabex
