// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace augabex {

std::string to_lower_ascii(std::string_view s);

/// Maximal ASCII alphanumeric runs, lowercased.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace augabex
