// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace augabex {

/// Text vectors produced by an external encoder. Immutable once loaded.
///
/// File format (one JSON object per line):
///   {"dim": 768, "model": "<provider tag>"}
///   {"id": "c1:oag", "vector": [0.1, ...]}
class EmbeddingStore {
 public:
  EmbeddingStore(std::size_t dim, std::string model_tag);

  std::size_t dim() const { return dim_; }
  const std::string& model_tag() const { return model_tag_; }
  std::size_t size() const { return vectors_.size(); }
  bool contains(const std::string& id) const { return vectors_.contains(id); }
  /// Throws LookupError for an unknown id.
  const std::vector<double>& vector(const std::string& id) const;

  /// Throws ValidationError on a dimension mismatch, a non-finite component
  /// or a duplicate id.
  void add(std::string id, std::vector<double> values);

 private:
  std::size_t dim_;
  std::string model_tag_;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

EmbeddingStore load_embeddings(const std::filesystem::path& path);
EmbeddingStore read_embeddings(std::istream& in);

/// Cosine of two stored vectors; NumericError when either has zero norm.
double embed_cosine(const EmbeddingStore& store, const std::string& id_a, const std::string& id_b);

/// Id under which the text `part` ("doc", "oag", "teg", "lsa") of record
/// `record_id` is looked up.
std::string embedding_id(std::string_view record_id, std::string_view part);

}  // namespace augabex
