// Copyright 2026 The wsdkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wsd/report.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include "test_support.hpp"
#include "wsd/error.hpp"

namespace wsd {
namespace {

TEST(Fixed2, RoundsHalfUp) {
  EXPECT_EQ(fixed2(4.2), "4.20");
  EXPECT_EQ(fixed2(5.515), "5.52");
  EXPECT_EQ(fixed2(1.145), "1.15");
  EXPECT_EQ(fixed2(0.0), "0.00");
  EXPECT_EQ(fixed2(2.0 / 3.0), "0.67");
  EXPECT_EQ(fixed2(-1.234), "-1.23");
  EXPECT_EQ(percent(4.0 / 7.0), "57.14");
  EXPECT_EQ(percent(1.0), "100.00");
}

TEST(FormatStats, PolysemyRowRoundTrips) {
  CorpusStats s;
  s.instances = 1260;
  s.word_types = 541;
  s.wap = 4.2;
  s.iap = 5.52;
  s.pw = 421;
  const std::vector<NamedStats> rows = {{"SE13-wn", s}};
  const std::string tsv = format_stats(rows, StatsLayout::kPolysemy, ReportStyle::kTsv);
  EXPECT_EQ(tsv, "Set\tInstances\tWT\tWAP\tIAP\tPW\nSE13-wn\t1260\t541\t4.20\t5.52\t421\n");
  StatsLayout layout = StatsLayout::kFull;
  const std::vector<NamedStats> back = parse_stats_tsv(tsv, &layout);
  EXPECT_EQ(layout, StatsLayout::kPolysemy);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].name, "SE13-wn");
  EXPECT_EQ(back[0].stats, s);
}

TEST(FormatStats, CompositionRowRoundTrips) {
  CorpusStats s;
  s.instances = 1481;
  s.sw = 1103;
  s.mw = 129;
  s.entities = 249;
  s.msi = 1.15;
  s.msl = 1.19;
  const std::vector<NamedStats> rows = {{"SE13", s}};
  const std::string tsv = format_stats(rows, StatsLayout::kComposition, ReportStyle::kTsv);
  EXPECT_EQ(tsv, "Set\tInstances\tSW\tMW\tEntities\tMSI\tMSL\nSE13\t1481\t1103\t129\t249\t1.15\t1.19\n");
  EXPECT_EQ(parse_stats_tsv(tsv)[0].stats, s);
}

TEST(FormatStats, EmptyAndPlainAndStructured) {
  EXPECT_EQ(format_stats({}, StatsLayout::kPolysemy, ReportStyle::kTsv),
            "Set\tInstances\tWT\tWAP\tIAP\tPW\n");
  EXPECT_TRUE(parse_stats_tsv("Set\tInstances\tWT\tWAP\tIAP\tPW\n").empty());

  CorpusStats s;
  s.instances = 1;
  s.word_types = 1;
  s.wap = 4;
  s.iap = 4;
  s.pw = 1;
  const std::vector<NamedStats> rows = {{"taza", s}};
  EXPECT_EQ(format_stats(rows, StatsLayout::kPolysemy, ReportStyle::kPlain),
            "Set   Instances  WT   WAP   IAP  PW\n"
            "taza          1   1  4.00  4.00   1\n");
  const auto j = nlohmann::json::parse(
      format_stats(rows, StatsLayout::kPolysemy, ReportStyle::kStructured));
  EXPECT_EQ(j[0]["name"], "taza");
  EXPECT_EQ(j[0]["wap"], 4.0);
  EXPECT_EQ(j[0]["msl"], 0.0);
}

TEST(FormatStats, FullLayoutMatchesRandomStats) {
  Rng rng(11);
  std::vector<NamedStats> rows;
  for (int i = 0; i < 20; ++i) {
    const testing::StatsFixture f = testing::random_stats_fixture(rng);
    rows.push_back({"set" + std::to_string(i), corpus_stats(f.corpus, f.gold, f.inventory)});
  }
  const std::vector<NamedStats> back =
      parse_stats_tsv(format_stats(rows, StatsLayout::kFull, ReportStyle::kTsv));
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].stats.instances, rows[i].stats.instances);
    EXPECT_EQ(back[i].stats.pw, rows[i].stats.pw);
    EXPECT_NEAR(back[i].stats.wap, rows[i].stats.wap, 0.005 + 1e-12);
    EXPECT_NEAR(back[i].stats.msl, rows[i].stats.msl, 0.005 + 1e-12);
  }
}

TEST(ParseStatsTsv, Errors) {
  EXPECT_THROW(parse_stats_tsv(""), FormatError);
  EXPECT_THROW(parse_stats_tsv("Set\tFoo\n"), FormatError);
  EXPECT_THROW(parse_stats_tsv("Set\tInstances\tWT\tWAP\tIAP\tPW\nx\t1\t2\n"), FormatError);
  EXPECT_THROW(parse_stats_tsv("Set\tInstances\tWT\tWAP\tIAP\tPW\nx\t1\t2\tfour\t1\t1\n"),
               FormatError);
  EXPECT_THROW(parse_stats_tsv("Set\tInstances\tWT\tWAP\tIAP\tPW\nx\t-1\t2\t4\t1\t1\n"),
               FormatError);
}

TEST(FormatScore, Styles) {
  ScoreReport r;
  static_cast<ScoreCounts&>(r) = ScoreCounts::from(4, 3, 2);
  r.per_pos["NOUN"] = ScoreCounts::from(4, 3, 2);
  EXPECT_EQ(format_score(r, ReportStyle::kPlain),
            "Total 4\nAttempted 3\nCorrect 2\nP 66.67\nR 50.00\nF1 57.14\n");
  EXPECT_EQ(format_score(r, ReportStyle::kTsv, true),
            "Scope\tTotal\tAttempted\tCorrect\tP\tR\tF1\n"
            "ALL\t4\t3\t2\t66.67\t50.00\t57.14\n"
            "NOUN\t4\t3\t2\t66.67\t50.00\t57.14\n");
  const auto j = nlohmann::json::parse(format_score(r, ReportStyle::kStructured, true));
  EXPECT_EQ(j["correct"], 2);
  EXPECT_EQ(j["per_pos"]["NOUN"]["total"], 4);
  EXPECT_NE(format_score(r, ReportStyle::kPlain, true).find("NOUN F1 57.14"),
            std::string::npos);
  EXPECT_EQ(parse_report_style("json"), ReportStyle::kStructured);
  EXPECT_THROW(parse_report_style("xml"), InputError);
  EXPECT_THROW(parse_stats_layout("wide"), InputError);
}

}  // namespace
}  // namespace wsd
