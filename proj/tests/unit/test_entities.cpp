// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <gtest/gtest.h>

#include "augabex/entities.hpp"
#include "augabex/error.hpp"
#include "generators.hpp"

namespace augabex {
namespace {

EntityAnnotation prov(std::string surface) { return {EntityLabel::kProvision, std::move(surface), std::nullopt}; }

std::vector<std::string> surfaces(const std::vector<EntityAnnotation>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(e.surface);
  return out;
}

TEST(Labels, FourteenLabelsRoundTrip) {
  for (std::size_t i = 0; i < kEntityLabelCount; ++i) {
    const auto label = static_cast<EntityLabel>(i);
    EXPECT_EQ(parse_label(label_name(label)), label);
  }
  EXPECT_EQ(label_name(EntityLabel::kCaseNumber), "CASE_NUMBER");
  EXPECT_EQ(label_name(EntityLabel::kOtherPerson), "OTHER_PERSON");
  EXPECT_FALSE(parse_label("PERSON").has_value());
}

TEST(PatternEntities, CanonicalProvision) {
  const auto es = extract_pattern_entities("convicted under Section 302 of the Penal Code");
  ASSERT_GE(es.size(), 1u);
  EXPECT_EQ(es[0].label, EntityLabel::kProvision);
  EXPECT_EQ(es[0].surface, "Section 302");
  EXPECT_EQ(es[0].span, (Span{16, 27}));
}

TEST(PatternEntities, NothingInPlainText) { EXPECT_TRUE(extract_pattern_entities("the cat sat").empty()); }

TEST(PatternEntities, PhrasalSummarySample) {
  const std::string text =
      "Constitution of India, Articles 14, 16 and 21 - Central Services (Medical Attendance) Rules, 1944, "
      "Rule 1 Note 2(iv) - ... under Art. 14, but not under Art. 21 - Article 21 provides ... - "
      "Administrative Tribunals Act, 1985, Section 19 empowers the Tribunal to issue mandamus.";
  const auto es = extract_pattern_entities(text);
  EXPECT_EQ(surfaces(es), (std::vector<std::string>{"Constitution of India", "Articles 14", "Articles 16",
                                                    "Articles 21", "Rule 1", "Art. 14", "Art. 21", "Article 21",
                                                    "Administrative Tribunals Act, 1985", "Section 19"}));
  EXPECT_EQ(es[0].label, EntityLabel::kStatute);
  EXPECT_EQ(es[8].label, EntityLabel::kStatute);
  // later enumeration items cover only their number
  EXPECT_EQ(text.substr(es[2].span->start, es[2].span->end - es[2].span->start), "16");
  EXPECT_EQ(lent_cnt(es), 10u);

  std::vector<EntityAnnotation> provisions;
  for (const auto& e : es)
    if (e.label == EntityLabel::kProvision) provisions.push_back(e);
  const std::vector<EntityAnnotation> teg = {prov("Article 21"), prov("Section 19")};
  // distinct keys: article 14, 16, 21, rule 1, section 19
  EXPECT_DOUBLE_EQ(*prov_recall(provisions, teg), 2.0 / 5.0);
}

TEST(PatternEntities, AbbreviationsAndSubsections) {
  EXPECT_EQ(surfaces(extract_pattern_entities("read with Sec. 5(2) and Order 21 Rule 97 and clause (b)")),
            (std::vector<std::string>{"Sec. 5(2)", "Order 21", "Rule 97"}));
  EXPECT_EQ(surfaces(extract_pattern_entities("charged u/s 498A IPC")), (std::vector<std::string>{"u/s 498A"}));
  EXPECT_EQ(surfaces(extract_pattern_entities("SECTION 3 and article 19(1)(g)")),
            (std::vector<std::string>{"SECTION 3", "article 19(1)(g)"}));
}

TEST(PatternEntities, Statutes) {
  const auto es = extract_pattern_entities("under the Code of Civil Procedure, 1908 and the Indian Evidence Act, 1872");
  EXPECT_EQ(surfaces(es), (std::vector<std::string>{"Code of Civil Procedure, 1908", "Indian Evidence Act, 1872"}));
  for (const auto& e : es) EXPECT_EQ(e.label, EntityLabel::kStatute);
}

TEST(PatternEntities, DeterministicSortedNonOverlapping) {
  testing::Gen gen(17);
  const std::vector<std::string> pieces = {"Section 3",  "Sec. 5(2)", "Articles 14, 16 and 21", "Rule 1",
                                           "Order 21",   "the",       "Indian Penal Code",      "Act, 1950",
                                           "Constitution of India",   ",",    "and", "Clause 4(a)", "u/s 302",
                                           "held",       "Article",   "14"};
  for (int iter = 0; iter < 300; ++iter) {
    std::string text;
    for (std::size_t i = 0, n = gen.size(0, 20); i < n; ++i) text += pieces[gen.size(0, pieces.size() - 1)] + " ";
    const auto a = extract_pattern_entities(text), b = extract_pattern_entities(text);
    ASSERT_EQ(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
      ASSERT_TRUE(a[i].span.has_value());
      ASSERT_LT(a[i].span->start, a[i].span->end);
      ASSERT_LE(a[i].span->end, text.size());
      if (i) {
        ASSERT_LE(a[i - 1].span->end, a[i].span->start) << text;
      }
      if (a[i].label == EntityLabel::kProvision) {
        ASSERT_NO_THROW(normalize_provision(a[i])) << a[i].surface;
      }
    }
  }
}

TEST(Normalize, KeysAndAbbreviations) {
  EXPECT_EQ(normalize_provision(prov("Section 302")), (ProvisionKey{ProvisionKind::kSection, "302"}));
  EXPECT_EQ(normalize_provision(prov("Art. 14")), (ProvisionKey{ProvisionKind::kArticle, "14"}));
  EXPECT_EQ(normalize_provision(prov("Section 5 (2)")), (ProvisionKey{ProvisionKind::kSection, "5(2)"}));
  EXPECT_EQ(normalize_provision(prov("sec. 498A")), (ProvisionKey{ProvisionKind::kSection, "498a"}));
  EXPECT_EQ(normalize_provision(prov("Clause 7")), (ProvisionKey{ProvisionKind::kClause, "7"}));
}

TEST(Normalize, Errors) {
  try {
    normalize_provision(prov("Schedule 4"));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("Schedule 4"), std::string::npos);
  }
  EXPECT_THROW(normalize_provision({EntityLabel::kCourt, "Section 3", std::nullopt}), ValidationError);
}

TEST(Normalize, Idempotent) {
  testing::Gen gen(29);
  const std::vector<std::string> keywords = {"Section", "Sec.", "sections", "Art.", "Article", "Rule",
                                             "Order",   "Clause", "cl.",    "u/s",  "SS."};
  for (int iter = 0; iter < 500; ++iter) {
    std::string number = std::to_string(gen.size(1, 999));
    if (gen.coin(0.3)) number += static_cast<char>('A' + gen.size(0, 5));
    for (std::size_t g = 0, n = gen.size(0, 2); g < n; ++g)
      number += std::string(gen.coin() ? " " : "") + "(" + std::to_string(gen.size(1, 9)) + ")";
    const ProvisionKey once = normalize_provision(prov(keywords[gen.size(0, keywords.size() - 1)] + " " + number));
    const ProvisionKey twice = normalize_provision(prov(once.to_string()));
    ASSERT_EQ(once, twice) << once.to_string();
  }
}

TEST(ProvRecall, SetArithmetic) {
  EXPECT_DOUBLE_EQ(*prov_recall({prov("Section 302"), prov("Article 14")}, {prov("Art. 14")}), 0.5);
  EXPECT_DOUBLE_EQ(*prov_recall({prov("Section 302")}, {prov("Sec. 302"), prov("Article 14")}), 1.0);
  EXPECT_FALSE(prov_recall({}, {prov("Section 302")}).has_value());
  const EntityAnnotation court{EntityLabel::kCourt, "High Court", std::nullopt};
  EXPECT_FALSE(prov_recall({court}, {court}).has_value());
  // duplicates collapse in the sets
  EXPECT_DOUBLE_EQ(*prov_recall({prov("Section 3"), prov("Sec. 3"), prov("Section 4")}, {prov("section 3")}), 0.5);
}

TEST(LentCnt, CountsDuplicates) {
  EXPECT_EQ(lent_cnt({}), 0u);
  const EntityAnnotation court{EntityLabel::kCourt, "High Court", std::nullopt};
  EXPECT_EQ(lent_cnt({prov("Section 3"), prov("Section 3"), court}), 3u);
}

TEST(ProvRecall, MonotoneAsExtractGrows) {
  testing::Gen gen(31);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<EntityAnnotation> oag, teg;
    for (std::size_t i = 0, n = gen.size(1, 6); i < n; ++i) oag.push_back(prov("Section " + std::to_string(gen.size(1, 8))));
    double prev = *prov_recall(oag, teg);
    ASSERT_EQ(prev, 0.0);
    for (int step = 0; step < 8; ++step) {
      teg.push_back(prov("Sec. " + std::to_string(gen.size(1, 10))));
      const double cur = *prov_recall(oag, teg);
      ASSERT_GE(cur, prev);
      ASSERT_LE(cur, 1.0);
      prev = cur;
    }
  }
}

}  // namespace
}  // namespace augabex
