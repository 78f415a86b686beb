// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "augabex/entities.hpp"
#include "augabex/error.hpp"
#include "augabex/text_util.hpp"

namespace augabex {
namespace {

constexpr std::array<std::string_view, kEntityLabelCount> kLabelNames = {
    "COURT", "PETITIONER", "RESPONDENT", "JUDGE", "LAWYER", "DATE", "ORG",
    "GPE", "STATUTE", "PROVISION", "PRECEDENT", "CASE_NUMBER", "WITNESS", "OTHER_PERSON",
};

struct Keyword {
  std::string_view text;  // lowercase
  ProvisionKind kind;
};

// Longer spellings first so that "sections" is preferred over "section".
constexpr std::array<Keyword, 17> kKeywords = {{
    {"sections", ProvisionKind::kSection}, {"section", ProvisionKind::kSection},
    {"secs.", ProvisionKind::kSection},    {"sec.", ProvisionKind::kSection},
    {"ss.", ProvisionKind::kSection},      {"u/s", ProvisionKind::kSection},
    {"articles", ProvisionKind::kArticle}, {"article", ProvisionKind::kArticle},
    {"arts.", ProvisionKind::kArticle},    {"art.", ProvisionKind::kArticle},
    {"rules", ProvisionKind::kRule},       {"rule", ProvisionKind::kRule},
    {"orders", ProvisionKind::kOrder},     {"order", ProvisionKind::kOrder},
    {"clauses", ProvisionKind::kClause},   {"clause", ProvisionKind::kClause},
    {"cl.", ProvisionKind::kClause},
}};

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

bool iequals_at(std::string_view text, std::size_t pos, std::string_view lower_word) {
  if (pos + lower_word.size() > text.size()) return false;
  for (std::size_t i = 0; i < lower_word.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[pos + i])) != lower_word[i]) return false;
  }
  return true;
}

// Provision keyword starting at `pos`, honouring word boundaries.
const Keyword* keyword_at(std::string_view text, std::size_t pos) {
  if (pos > 0 && is_alnum(text[pos - 1])) return nullptr;
  for (const auto& kw : kKeywords) {
    if (!iequals_at(text, pos, kw.text)) continue;
    const std::size_t end = pos + kw.text.size();
    if (kw.text.back() != '.' && end < text.size() && is_alnum(text[end])) continue;
    return &kw;
  }
  return nullptr;
}

std::size_t skip_spaces(std::string_view text, std::size_t pos) {
  while (pos < text.size() && is_space(text[pos])) ++pos;
  return pos;
}

// A provision number: digits, an optional one-letter suffix, then any number
// of parenthesised sub-parts ("5(2)(a)"). Returns the end offset, or npos.
std::size_t number_end(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  while (i < text.size() && is_digit(text[i])) ++i;
  if (i == pos) return std::string_view::npos;
  if (i < text.size() && is_alpha(text[i]) && (i + 1 == text.size() || !is_alnum(text[i + 1]))) ++i;
  if (i < text.size() && is_alnum(text[i])) return std::string_view::npos;
  for (;;) {
    std::size_t j = skip_spaces(text, i);
    if (j >= text.size() || text[j] != '(') break;
    std::size_t k = j + 1;
    while (k < text.size() && is_alnum(text[k]) && k - j <= 6) ++k;
    if (k == j + 1 || k >= text.size() || text[k] != ')') break;
    i = k + 1;
  }
  return i;
}

// Separator between enumerated numbers: ",", "and", "or", "&" (optionally
// combined as ", and"). Returns the offset of the next number, or npos.
std::size_t enumeration_next(std::string_view text, std::size_t pos) {
  std::size_t i = skip_spaces(text, pos);
  bool any = false;
  if (i < text.size() && (text[i] == ',' || text[i] == '&')) {
    ++i;
    any = true;
    i = skip_spaces(text, i);
  }
  for (std::string_view word : {std::string_view("and"), std::string_view("or")}) {
    if (iequals_at(text, i, word) && i + word.size() < text.size() && is_space(text[i + word.size()]) &&
        (any || (i > pos && is_space(text[i - 1])))) {
      i = skip_spaces(text, i + word.size());
      any = true;
      break;
    }
  }
  if (!any || i >= text.size() || !is_digit(text[i])) return std::string_view::npos;
  return i;
}

std::string normalize_number(std::string_view raw) {
  std::string out;
  for (char c : raw) {
    if (is_alnum(c) || c == '(' || c == ')') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

void scan_provisions(std::string_view text, std::vector<EntityAnnotation>& out) {
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const Keyword* kw = keyword_at(text, pos);
    if (!kw) continue;
    const std::size_t kw_end = pos + kw->text.size();
    const std::size_t num_start = skip_spaces(text, kw_end);
    if (kw->text.back() != '.' && kw->text != "u/s" && num_start == kw_end) continue;
    std::size_t num_stop = number_end(text, num_start);
    if (num_stop == std::string_view::npos) continue;

    const std::string keyword(text.substr(pos, kw->text.size()));
    out.push_back({EntityLabel::kProvision, std::string(text.substr(pos, num_stop - pos)), Span{pos, num_stop}});
    for (;;) {
      const std::size_t next = enumeration_next(text, num_stop);
      if (next == std::string_view::npos) break;
      const std::size_t stop = number_end(text, next);
      if (stop == std::string_view::npos) break;
      out.push_back({EntityLabel::kProvision, keyword + " " + std::string(text.substr(next, stop - next)),
                     Span{next, stop}});
      num_stop = stop;
    }
    pos = num_stop - 1;
  }
}

// Whitespace-delimited word ending right before `end`; returns its start.
std::size_t word_start_before(std::string_view text, std::size_t end) {
  std::size_t b = end;
  while (b > 0 && !is_space(text[b - 1])) --b;
  return b;
}

bool capitalized_word(std::string_view w) {
  if (w.empty() || !is_upper(w[0])) return false;
  return std::all_of(w.begin(), w.end(), [](char c) {
    return is_alpha(c) || c == '(' || c == ')' || c == '-' || c == '\'' || c == '&';
  });
}

bool leading_function_word(std::string_view w) {
  static const std::set<std::string_view> words = {
      "The", "Under", "In", "See", "By", "As", "That", "This", "And", "Of", "With", "From", "For",
      "To", "On", "At", "If", "Per", "Whereas", "Both", "While", "Since", "When", "Where", "Section",
      "Sections", "Article", "Articles", "Rule", "Rules", "Order", "Orders", "Clause", "Clauses",
  };
  return words.contains(w);
}

// Extends a statute name backwards from the anchor word starting at
// `anchor`: capitalized words, joined by "of" / "and" / "&". Returns the
// phrase start and the number of capitalized words taken (anchor excluded).
std::pair<std::size_t, std::size_t> extend_back(std::string_view text, std::size_t anchor) {
  std::size_t start = anchor;
  std::size_t cursor = anchor;
  std::size_t capitals = 0;
  for (;;) {
    std::size_t gap = cursor;
    while (gap > 0 && (text[gap - 1] == ' ' || text[gap - 1] == '\t')) --gap;
    if (gap == cursor || gap == 0) break;
    const std::size_t ws = word_start_before(text, gap);
    const std::string_view w = text.substr(ws, gap - ws);
    if (w == "of" || w == "and" || w == "&") {
      cursor = ws;
      continue;
    }
    if (!capitalized_word(w)) break;
    cursor = ws;
    start = ws;
    ++capitals;
  }
  // Drop leading function words ("Under the ..." style openers).
  while (start < anchor) {
    std::size_t e = start;
    while (e < text.size() && !is_space(text[e])) ++e;
    const std::string_view w = text.substr(start, e - start);
    if (!leading_function_word(w) && w != "of" && w != "and" && w != "&") break;
    if (capitalized_word(w)) --capitals;
    start = skip_spaces(text, e);
  }
  return {start, capitals};
}

bool word_at(std::string_view text, std::size_t pos, std::string_view word) {
  if (text.substr(pos, word.size()) != word) return false;
  if (pos > 0 && is_alnum(text[pos - 1])) return false;
  const std::size_t end = pos + word.size();
  return end == text.size() || !is_alnum(text[end]);
}

// ",? <4-digit year>" right after `pos`; returns end offset or npos.
std::size_t year_after(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  if (i < text.size() && text[i] == ',') ++i;
  const std::size_t j = skip_spaces(text, i);
  if (j == i && i == pos) return std::string_view::npos;
  std::size_t k = j;
  while (k < text.size() && is_digit(text[k])) ++k;
  if (k - j != 4 || (k < text.size() && is_alnum(text[k]))) return std::string_view::npos;
  return k;
}

void scan_statutes(std::string_view text, std::vector<EntityAnnotation>& out) {
  auto add = [&](std::size_t b, std::size_t e) {
    out.push_back({EntityLabel::kStatute, std::string(text.substr(b, e - b)), Span{b, e}});
  };
  constexpr std::string_view kConstitution = "Constitution of India";
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    if (word_at(text, pos, kConstitution)) {
      add(pos, pos + kConstitution.size());
      continue;
    }
    if (word_at(text, pos, "Act")) {
      const std::size_t stop = year_after(text, pos + 3);
      if (stop == std::string_view::npos) continue;
      const auto [start, capitals] = extend_back(text, pos);
      if (capitals >= 1) add(start, stop);
      continue;
    }
    if (word_at(text, pos, "Code")) {
      auto [start, capitals] = extend_back(text, pos);
      std::size_t stop = pos + 4;
      // "Code of Criminal Procedure"
      if (text.substr(stop, 4) == " of ") {
        std::size_t i = stop + 4;
        std::size_t last = stop;
        for (;;) {
          std::size_t e = i;
          while (e < text.size() && (is_alpha(text[e]) || text[e] == '-')) ++e;
          if (e == i || !is_upper(text[i])) break;
          last = e;
          ++capitals;
          if (e >= text.size() || text[e] != ' ') break;
          i = e + 1;
        }
        stop = last;
      }
      if (capitals < 1) continue;
      if (const std::size_t y = year_after(text, stop); y != std::string_view::npos) stop = y;
      add(start, stop);
    }
  }
}

}  // namespace

std::string_view label_name(EntityLabel label) { return kLabelNames[static_cast<std::size_t>(label)]; }

std::optional<EntityLabel> parse_label(std::string_view name) {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
    if (kLabelNames[i] == name) return static_cast<EntityLabel>(i);
  }
  return std::nullopt;
}

std::string_view kind_name(ProvisionKind kind) {
  switch (kind) {
    case ProvisionKind::kSection: return "section";
    case ProvisionKind::kArticle: return "article";
    case ProvisionKind::kRule: return "rule";
    case ProvisionKind::kOrder: return "order";
    case ProvisionKind::kClause: return "clause";
  }
  return "section";
}

std::string ProvisionKey::to_string() const { return std::string(kind_name(kind)) + " " + number; }

std::vector<EntityAnnotation> extract_pattern_entities(std::string_view text) {
  std::vector<EntityAnnotation> found;
  scan_provisions(text, found);
  scan_statutes(text, found);
  std::stable_sort(found.begin(), found.end(), [](const EntityAnnotation& a, const EntityAnnotation& b) {
    if (a.span->start != b.span->start) return a.span->start < b.span->start;
    return a.span->end > b.span->end;
  });
  std::vector<EntityAnnotation> out;
  std::size_t covered = 0;
  for (auto& e : found) {
    if (!out.empty() && e.span->start < covered) continue;
    covered = e.span->end;
    out.push_back(std::move(e));
  }
  return out;
}

ProvisionKey normalize_provision(const EntityAnnotation& entity) {
  if (entity.label != EntityLabel::kProvision)
    throw ValidationError("normalize_provision: not a PROVISION entity: \"" + entity.surface + "\"");
  const std::string_view s = entity.surface;
  const std::size_t pos = skip_spaces(s, 0);
  const Keyword* kw = keyword_at(s, pos);
  if (kw) {
    const std::size_t num_start = skip_spaces(s, pos + kw->text.size());
    const std::size_t stop = number_end(s, num_start);
    if (stop != std::string_view::npos) return {kw->kind, normalize_number(s.substr(num_start, stop - num_start))};
  }
  throw ValidationError("unparseable provision \"" + entity.surface + "\"");
}

std::optional<double> prov_recall(const std::vector<EntityAnnotation>& oag_entities,
                                  const std::vector<EntityAnnotation>& teg_entities) {
  auto keys = [](const std::vector<EntityAnnotation>& ents) {
    std::set<ProvisionKey> out;
    for (const auto& e : ents) {
      if (e.label != EntityLabel::kProvision) continue;
      try {
        out.insert(normalize_provision(e));
      } catch (const ValidationError&) {
      }
    }
    return out;
  };
  const auto po = keys(oag_entities);
  if (po.empty()) return std::nullopt;
  const auto pt = keys(teg_entities);
  std::size_t hit = 0;
  for (const auto& k : po) hit += pt.count(k);
  return static_cast<double>(hit) / static_cast<double>(po.size());
}

}  // namespace augabex
