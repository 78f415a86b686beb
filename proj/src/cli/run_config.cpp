// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "augabex/cli.hpp"

namespace augabex::cli {
namespace {

void require_file(const std::filesystem::path& p, const char* flag) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(p, ec))
    throw UsageError(std::string(flag) + ": no such file: " + p.string());
}

}  // namespace

void RunConfig::validate() const {
  static const std::vector<std::string> commands = {"transform", "evaluate", "baseline-lsa",
                                                    "sweep-k",   "stats",    "sample-review"};
  if (std::find(commands.begin(), commands.end(), command) == commands.end())
    throw UsageError("unknown command \"" + command + "\"");
  if (input.empty()) throw UsageError("--input is required");
  require_file(input, "--input");
  if (command == "evaluate" && !teg) throw UsageError("evaluate needs --teg");
  if (teg) require_file(*teg, "--teg");
  if (embeddings) require_file(*embeddings, "--embeddings");
  if (stopwords) require_file(*stopwords, "--stopwords");
  if (k < 1) throw UsageError("--k must be >= 1");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw UsageError("--lambda must lie in [0, 1]");
  if (!(alpha > 0.0)) throw UsageError("--alpha must be > 0");
  if (k_values.empty()) throw UsageError("--k-values needs at least one value");
  for (std::size_t kv : k_values)
    if (kv < 1) throw UsageError("--k-values entries must be >= 1");
  if (workers < 1) throw UsageError("--workers must be >= 1");
  std::error_code ec;
  if (std::filesystem::exists(out, ec) && !std::filesystem::is_directory(out, ec))
    throw UsageError("--out is not a directory: " + out.string());
}

StopwordSet RunConfig::resolve_stopwords() const {
  if (stopwords) return load_stopwords(*stopwords);
  if (const char* env = std::getenv("AUGABEX_STOPWORDS"); env && *env) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(env, ec))
      throw UsageError(std::string("AUGABEX_STOPWORDS: no such file: ") + env);
    return load_stopwords(env);
  }
  return default_stopwords();
}

std::vector<std::size_t> parse_k_values(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw UsageError("--k-values: empty entry in \"" + text + "\"");
    item = item.substr(b, e - b + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--k-values: not a positive integer: \"" + item + "\"");
    const auto v = std::stoull(item);
    if (v < 1) throw UsageError("--k-values entries must be >= 1");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw UsageError("--k-values needs at least one value");
  return out;
}

}  // namespace augabex::cli
