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

#include "wsd/metrics.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wsd/error.hpp"

namespace wsd {
namespace {

Prediction pred(const std::string& id, const std::string& sense) {
  return Prediction{id, sense, 0.0, false, ""};
}

TEST(Score, FourThreeTwoFixture) {
  const GoldKeys gold = {{"a", {"s1"}}, {"b", {"s2"}}, {"c", {"s3"}}, {"d", {"s4"}}};
  const ScoreReport r = score({pred("a", "s1"), pred("b", "s2"), pred("c", "x")}, gold);
  EXPECT_EQ(r.total, 4u);
  EXPECT_EQ(r.attempted, 3u);
  EXPECT_EQ(r.correct, 2u);
  EXPECT_NEAR(r.precision, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.recall, 0.5, 1e-12);
  EXPECT_NEAR(r.f1, 0.5714, 1e-4);
  EXPECT_NEAR(r.f1, 2 * (2.0 / 3.0) * 0.5 / (2.0 / 3.0 + 0.5), 1e-12);
}

TEST(Score, PerfectAndEmpty) {
  const GoldKeys gold = {{"a", {"s1", "s9"}}, {"b", {"s2"}}};
  const ScoreReport perfect = score({pred("a", "s9"), pred("b", "s2")}, gold);
  EXPECT_EQ(perfect.f1, 1.0);
  const ScoreReport none = score({}, gold);
  EXPECT_EQ(none.attempted, 0u);
  EXPECT_EQ(none.precision, 0.0);
  EXPECT_EQ(none.f1, 0.0);
  const ScoreReport nothing = score({}, GoldKeys{});
  EXPECT_EQ(nothing.recall, 0.0);
  EXPECT_EQ(ScoreCounts::from(5, 2, 0).f1, 0.0);
}

TEST(Score, AbstentionsAreNotAttempted) {
  const GoldKeys gold = {{"a", {"s1"}}, {"b", {"s2"}}};
  Prediction skipped = pred("b", "");
  skipped.abstained = true;
  const ScoreReport r = score({pred("a", "s1"), skipped}, gold);
  EXPECT_EQ(r.attempted, 1u);
  EXPECT_EQ(r.precision, 1.0);
  EXPECT_EQ(r.recall, 0.5);
}

TEST(Score, UnknownAndRepeatedIds) {
  const GoldKeys gold = {{"a", {"s1"}}};
  try {
    score({pred("zz", "s1")}, gold);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
  }
  EXPECT_THROW(score({pred("a", "s1"), pred("a", "s1")}, gold), DataError);
}

TEST(Score, PerPosSplit) {
  const GoldKeys gold = {{"a", {"s1"}}, {"b", {"s2"}}, {"c", {"s3"}}};
  const std::map<std::string, PosTag> pos = {{"a", PosTag::noun()}, {"b", PosTag::verb()}};
  const ScoreReport r = score({pred("a", "s1"), pred("b", "no")}, gold, &pos);
  ASSERT_EQ(r.per_pos.size(), 3u);
  EXPECT_EQ(r.per_pos.at("NOUN").f1, 1.0);
  EXPECT_EQ(r.per_pos.at("VERB").correct, 0u);
  EXPECT_EQ(r.per_pos.at("UNK").total, 1u);
  EXPECT_EQ(r.per_pos.at("UNK").attempted, 0u);
}

TEST(Score, RandomGuesserLandsNearChance) {
  Rng rng(2024);
  GoldKeys gold;
  std::vector<Prediction> preds;
  for (int i = 0; i < 10000; ++i) {
    const std::string id = "i" + std::to_string(i);
    gold[id] = {"s" + std::to_string(testing::draw(rng, 4))};
    preds.push_back(pred(id, "s" + std::to_string(testing::draw(rng, 4))));
  }
  const ScoreReport r = score(preds, gold);
  EXPECT_GE(r.f1, 0.23);
  EXPECT_LE(r.f1, 0.27);
}

Corpus one_sentence(const std::vector<Token>& tokens) {
  Corpus corpus;
  corpus.lang = "es";
  corpus.documents.push_back({"d1", {Sentence{"d1.s1", tokens}}});
  return corpus;
}

Token instance(const std::string& id, const std::string& surface, const std::string& lemma,
               const PosTag& pos, bool entity = false) {
  return Token{TokenKind::kInstance, surface, lemma, pos, id, entity};
}

TEST(CorpusStats, TazaExample) {
  const SenseInventory inv = testing::taza_inventory();
  const Corpus corpus = parse_corpus_xml(testing::read_data("taza_corpus.xml"));
  const CorpusStats s =
      corpus_stats(corpus, parse_gold(testing::read_data("taza.key")), inv);
  EXPECT_EQ(s.instances, 1u);
  EXPECT_EQ(s.word_types, 1u);
  EXPECT_EQ(s.wap, 4.0);
  EXPECT_EQ(s.iap, 4.0);
  EXPECT_EQ(s.pw, 1u);
  EXPECT_EQ(s.sw, 1u);
  EXPECT_EQ(s.mw, 0u);
  EXPECT_EQ(s.msl, 4.0);
}

TEST(CorpusStats, MonosemousIsNotPolysemous) {
  SenseInventory inv;
  inv.add("gato", PosTag::noun(), {SenseEntry{"G1", "", {}, 0}});
  const Corpus corpus = one_sentence({instance("d1.s1.t1", "gato", "gato", PosTag::noun())});
  const CorpusStats s = corpus_stats(corpus, {{"d1.s1.t1", {"G1"}}}, inv);
  EXPECT_EQ(s.pw, 0u);
  EXPECT_EQ(s.wap, 1.0);
}

TEST(CorpusStats, SyntheticMixture) {
  // A has 2 senses and B has 5; instances: A, A, A, B.
  SenseInventory inv;
  inv.add("a", PosTag::noun(), {{"a1", "", {}, 0}, {"a2", "", {}, 1}});
  inv.add("b", PosTag::verb(),
          {{"b1", "", {}, 0}, {"b2", "", {}, 1}, {"b3", "", {}, 2}, {"b4", "", {}, 3},
           {"b5", "", {}, 4}});
  inv.add("b", PosTag::noun(), {{"bn", "", {}, 0}});
  const Corpus corpus = one_sentence({instance("d1.s1.t1", "a", "a", PosTag::noun()),
                                      instance("d1.s1.t2", "A", "A", PosTag::noun()),
                                      instance("d1.s1.t3", "a b", "a", PosTag::noun()),
                                      instance("d1.s1.t4", "B", "b", PosTag::verb(), true)});
  const GoldKeys gold = {{"d1.s1.t1", {"a1"}}, {"d1.s1.t2", {"a2"}},
                         {"d1.s1.t3", {"a1"}}, {"d1.s1.t4", {"b2"}}};
  const CorpusStats s = corpus_stats(corpus, gold, inv);
  EXPECT_EQ(s.word_types, 2u);
  EXPECT_DOUBLE_EQ(s.wap, 3.5);
  EXPECT_DOUBLE_EQ(s.iap, 2.75);
  EXPECT_DOUBLE_EQ(s.msi, 2.75);
  EXPECT_EQ(s.pw, 2u);
  EXPECT_EQ(s.sw, 2u);
  EXPECT_EQ(s.mw, 1u);
  EXPECT_EQ(s.entities, 1u);
  EXPECT_DOUBLE_EQ(s.msl, 4.0);  // a: 2, b: 5 + 1
}

TEST(CorpusStats, UnresolvableInstancesAreListed) {
  const SenseInventory inv = testing::taza_inventory();
  const Corpus corpus = one_sentence({instance("d1.s1.t1", "perro", "perro", PosTag::noun()),
                                      instance("d1.s1.t2", "taza", "taza", PosTag::noun())});
  try {
    corpus_stats(corpus, {{"d1.s1.t1", {"x"}}}, inv);
    FAIL();
  } catch (const DataError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("d1.s1.t1"), std::string::npos) << what;
    EXPECT_NE(what.find("d1.s1.t2"), std::string::npos) << what;
  }
  EXPECT_EQ(corpus_stats(Corpus{}, {}, inv), CorpusStats{});
}

TEST(CorpusStatsProperty, MatchesOracle) {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const testing::StatsFixture f = testing::random_stats_fixture(rng);
    ASSERT_TRUE(testing::stats_match(corpus_stats(f.corpus, f.gold, f.inventory),
                                     testing::stats_oracle(f)))
        << "trial " << trial;
  }
}

}  // namespace
}  // namespace wsd
