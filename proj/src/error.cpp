// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include "augabex/error.hpp"

namespace augabex {

ParseError::ParseError(const std::string& what, std::size_t line)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace augabex
