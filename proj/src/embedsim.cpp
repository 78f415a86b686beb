// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "augabex/embedsim.hpp"
#include "augabex/error.hpp"
#include "augabex/simd.hpp"

namespace augabex {

EmbeddingStore::EmbeddingStore(std::size_t dim, std::string model_tag) : dim_(dim), model_tag_(std::move(model_tag)) {
  if (dim_ == 0) throw ValidationError("embedding dimension must be > 0");
}

const std::vector<double>& EmbeddingStore::vector(const std::string& id) const {
  auto it = vectors_.find(id);
  if (it == vectors_.end()) throw LookupError("no embedding for id \"" + id + "\"");
  return it->second;
}

void EmbeddingStore::add(std::string id, std::vector<double> values) {
  if (values.size() != dim_)
    throw ValidationError("embedding \"" + id + "\" has " + std::to_string(values.size()) +
                          " components, expected " + std::to_string(dim_));
  for (double v : values)
    if (!std::isfinite(v)) throw ValidationError("embedding \"" + id + "\" has a non-finite component");
  if (vectors_.contains(id)) throw ValidationError("duplicate embedding id \"" + id + "\"");
  vectors_.emplace(std::move(id), std::move(values));
}

EmbeddingStore read_embeddings(std::istream& in) {
  using nlohmann::json;
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  auto parse = [&]() {
    try {
      return json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
  };

  if (!next_line()) throw ParseError("empty embedding file (missing header)", 1);
  const json header = parse();
  if (!header.is_object() || !header.contains("dim") || !header["dim"].is_number_unsigned())
    throw ParseError("header needs a positive integer \"dim\"", line_no);
  std::string model;
  if (header.contains("model")) {
    if (!header["model"].is_string()) throw ParseError("header \"model\" must be a string", line_no);
    model = header["model"].get<std::string>();
  }
  EmbeddingStore store(header["dim"].get<std::size_t>(), model);

  while (next_line()) {
    const json obj = parse();
    if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string())
      throw ParseError("embedding line needs a string \"id\"", line_no);
    const std::string id = obj["id"].get<std::string>();
    if (!obj.contains("vector") || !obj["vector"].is_array())
      throw ParseError("embedding \"" + id + "\" needs a \"vector\" array", line_no);
    std::vector<double> values;
    values.reserve(obj["vector"].size());
    for (const auto& v : obj["vector"]) {
      // JSON has no NaN literal; a null component is how NaN usually leaks in.
      if (!v.is_number()) throw ValidationError("embedding \"" + id + "\" has a non-numeric (NaN) component");
      values.push_back(v.get<double>());
    }
    store.add(id, std::move(values));
  }
  return store;
}

EmbeddingStore load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open embedding file " + path.string());
  return read_embeddings(in);
}

double embed_cosine(const EmbeddingStore& store, const std::string& id_a, const std::string& id_b) {
  const auto& a = store.vector(id_a);
  const auto& b = store.vector(id_b);
  const double na = simd::squared_norm(a);
  const double nb = simd::squared_norm(b);
  if (na == 0.0) throw NumericError("embedding \"" + id_a + "\" has zero norm");
  if (nb == 0.0) throw NumericError("embedding \"" + id_b + "\" has zero norm");
  const double c = simd::dot(a, b) / std::sqrt(na * nb);
  return std::clamp(c, -1.0, 1.0);
}

std::string embedding_id(std::string_view record_id, std::string_view part) {
  std::string id(record_id);
  id += ':';
  id += part;
  return id;
}

}  // namespace augabex
