// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "augabex/error.hpp"
#include "augabex/stats.hpp"

namespace augabex {
namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError("bad number \"" + std::string(s) + "\"", line);
  return v;
}

}  // namespace

void PairedScores::validate() const {
  std::set<std::string> seen;
  for (const auto& r : rows) {
    if (!seen.insert(r.id).second) throw ValidationError("duplicate id \"" + r.id + "\" in " + metric);
    if (!std::isfinite(r.score_o) || !std::isfinite(r.score_t))
      throw ValidationError("non-finite score for id \"" + r.id + "\" in " + metric);
  }
}

BtTally bt_tally(const PairedScores& scores) {
  BtTally t;
  const bool higher = scores.orientation == Orientation::kHigherIsBetter;
  for (const auto& r : scores.rows) {
    if (r.score_o == r.score_t) ++t.ties;
    else if ((r.score_t > r.score_o) == higher) ++t.wins_t;
    else ++t.wins_o;
  }
  return t;
}

BtStrength bt_strength(const PairedScores& scores, TieMode ties) {
  if (scores.rows.empty()) throw ValidationError("bt_strength: no instances");
  scores.validate();
  BtStrength s;
  s.tally = bt_tally(scores);
  const auto wo = static_cast<double>(s.tally.wins_o);
  const auto wt = static_cast<double>(s.tally.wins_t);
  const auto tie = static_cast<double>(s.tally.ties);
  if (ties == TieMode::kSplit) {
    s.lambda_t = (wt + 0.5 * tie) / (wo + wt + tie);
  } else {
    s.lambda_t = (wo + wt) == 0.0 ? 0.5 : wt / (wo + wt);
  }
  // For x in [0, 1], fl(1 - x) + x rounds to exactly 1.
  s.lambda_o = 1.0 - s.lambda_t;
  return s;
}

MacroAverage macro_average(const std::vector<std::optional<double>>& values) {
  std::vector<double> defined;
  for (const auto& v : values)
    if (v) defined.push_back(*v);
  if (defined.empty()) throw ValidationError("macro_average: no defined values");
  MacroAverage m;
  m.n_defined = defined.size();
  double sum = 0.0;
  for (double v : defined) sum += v;
  m.mean = sum / static_cast<double>(defined.size());
  std::sort(defined.begin(), defined.end());
  m.median = defined[(defined.size() - 1) / 2];
  return m;
}

MacroAverage macro_average(const std::vector<double>& values) {
  return macro_average(std::vector<std::optional<double>>(values.begin(), values.end()));
}

void write_paired(const PairedScores& scores, std::ostream& out) {
  scores.validate();
  std::vector<const PairedRow*> rows;
  for (const auto& r : scores.rows) rows.push_back(&r);
  std::sort(rows.begin(), rows.end(), [](const PairedRow* a, const PairedRow* b) { return a->id < b->id; });
  out << "id,score_o,score_t\n";
  for (const PairedRow* r : rows) {
    if (r->id.find_first_of(",\n\"") != std::string::npos)
      throw ValidationError("id \"" + r->id + "\" cannot be written to CSV");
    out << r->id << ',' << format_double(r->score_o) << ',' << format_double(r->score_t) << '\n';
  }
}

void export_paired(const PairedScores& scores, const std::filesystem::path& path) {
  std::ostringstream buf;
  write_paired(scores, buf);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << buf.str();
  if (!out) throw IoError("write failed for " + path.string());
}

PairedScores read_paired(std::istream& in, std::string metric, Orientation orientation) {
  PairedScores scores;
  scores.metric = std::move(metric);
  scores.orientation = orientation;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("missing CSV header", 1);
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "id,score_o,score_t") throw ParseError("expected header id,score_o,score_t", line_no);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos)
      throw ParseError("expected 3 columns", line_no);
    const std::string_view v(line);
    scores.rows.push_back({line.substr(0, c1), parse_double(v.substr(c1 + 1, c2 - c1 - 1), line_no),
                           parse_double(v.substr(c2 + 1), line_no)});
  }
  scores.validate();
  return scores;
}

PairedScores load_paired(const std::filesystem::path& path, std::string metric, Orientation orientation) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_paired(in, std::move(metric), orientation);
}

std::vector<std::string> sample_for_review(const PairedScores& scores, std::size_t n_top, std::size_t n_bottom) {
  if (n_top + n_bottom > scores.rows.size())
    throw ValidationError("sample_for_review: asked for " + std::to_string(n_top + n_bottom) + " ids but only " +
                          std::to_string(scores.rows.size()) + " rows");
  std::vector<const PairedRow*> rows;
  for (const auto& r : scores.rows) rows.push_back(&r);
  std::sort(rows.begin(), rows.end(), [](const PairedRow* a, const PairedRow* b) {
    if (a->score_t != b->score_t) return a->score_t > b->score_t;
    return a->id < b->id;
  });
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n_top; ++i) ids.push_back(rows[i]->id);
  // Lowest scores; equal scores still prefer the smaller id.
  std::vector<const PairedRow*> rest(rows.begin() + static_cast<std::ptrdiff_t>(n_top), rows.end());
  std::sort(rest.begin(), rest.end(), [](const PairedRow* a, const PairedRow* b) {
    if (a->score_t != b->score_t) return a->score_t < b->score_t;
    return a->id < b->id;
  });
  for (std::size_t i = 0; i < n_bottom; ++i) ids.push_back(rest[i]->id);
  return ids;
}

}  // namespace augabex
