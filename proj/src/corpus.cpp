// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "augabex/corpus.hpp"
#include "augabex/error.hpp"

namespace augabex {
namespace {

using nlohmann::json;

std::string required_string(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"", line);
  if (!it->is_string()) throw ParseError(std::string("field \"") + key + "\" is not a string", line);
  return it->get<std::string>();
}

std::vector<EntityAnnotation> parse_entities(const json& arr, const char* key, std::size_t line) {
  if (!arr.is_array()) throw ParseError(std::string("field \"") + key + "\" is not an array", line);
  std::vector<EntityAnnotation> out;
  out.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_object()) throw ParseError(std::string("entity in \"") + key + "\" is not an object", line);
    const std::string label_text = required_string(e, "label", line);
    auto label = parse_label(label_text);
    if (!label) throw ParseError("unknown entity label \"" + label_text + "\"", line);
    EntityAnnotation ann;
    ann.label = *label;
    ann.surface = required_string(e, "text", line);
    if (ann.surface.empty()) throw ParseError("entity with empty text", line);
    const bool has_start = e.contains("start") && !e["start"].is_null();
    const bool has_end = e.contains("end") && !e["end"].is_null();
    if (has_start != has_end) throw ParseError("entity span needs both start and end", line);
    if (has_start) {
      if (!e["start"].is_number_unsigned() || !e["end"].is_number_unsigned())
        throw ParseError("entity span offsets must be non-negative integers", line);
      Span span{e["start"].get<std::size_t>(), e["end"].get<std::size_t>()};
      if (span.end < span.start) throw ParseError("entity span end before start", line);
      ann.span = span;
    }
    out.push_back(std::move(ann));
  }
  return out;
}

}  // namespace

std::vector<CaseRecord> read_corpus(std::istream& in) {
  std::vector<CaseRecord> records;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (!obj.is_object()) throw ParseError("record is not a JSON object", line_no);

    CaseRecord rec;
    rec.id = required_string(obj, "id", line_no);
    rec.dataset = required_string(obj, "dataset", line_no);
    rec.doc_text = required_string(obj, "doc", line_no);
    rec.oag_text = required_string(obj, "summary", line_no);
    if (obj.contains("entities_doc")) rec.entities_doc = parse_entities(obj["entities_doc"], "entities_doc", line_no);
    if (obj.contains("entities_summary"))
      rec.entities_oag = parse_entities(obj["entities_summary"], "entities_summary", line_no);

    if (rec.id.empty()) throw ValidationError("line " + std::to_string(line_no) + ": empty id");
    if (rec.doc_text.empty()) throw ValidationError("record \"" + rec.id + "\": empty doc");
    if (rec.oag_text.empty()) throw ValidationError("record \"" + rec.id + "\": empty summary");
    if (!seen.insert(rec.id).second)
      throw ValidationError("duplicate record id \"" + rec.id + "\" at line " + std::to_string(line_no));
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<CaseRecord> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file " + path.string());
  return read_corpus(in);
}

CorpusStats corpus_stats(const std::vector<CaseRecord>& records) {
  if (records.empty()) throw ValidationError("corpus_stats: empty corpus");
  CorpusStats st;
  st.n_docs = records.size();
  double wc_doc = 0, wc_sum = 0, sc_doc = 0, sc_sum = 0, cr = 0;
  for (const auto& r : records) {
    const SegmentedText doc = segment(r.doc_text);
    const SegmentedText sum = segment(r.oag_text);
    if (sum.word_count == 0)
      throw NumericError("corpus_stats: summary of record \"" + r.id + "\" has no words");
    wc_doc += static_cast<double>(doc.word_count);
    wc_sum += static_cast<double>(sum.word_count);
    sc_doc += static_cast<double>(doc.size());
    sc_sum += static_cast<double>(sum.size());
    cr += static_cast<double>(doc.word_count) / static_cast<double>(sum.word_count);
  }
  const double n = static_cast<double>(records.size());
  st.avg_wc_doc = wc_doc / n;
  st.avg_wc_sum = wc_sum / n;
  st.avg_sc_doc = sc_doc / n;
  st.avg_sc_sum = sc_sum / n;
  st.avg_cr = cr / n;
  return st;
}

std::map<std::string, CorpusStats> corpus_stats_by_dataset(const std::vector<CaseRecord>& records) {
  std::map<std::string, std::vector<CaseRecord>> groups;
  for (const auto& r : records) groups[r.dataset].push_back(r);
  std::map<std::string, CorpusStats> out;
  for (const auto& [name, recs] : groups) out.emplace(name, corpus_stats(recs));
  return out;
}

}  // namespace augabex
