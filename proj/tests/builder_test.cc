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

#include "wsd/builder.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "test_support.hpp"
#include "wsd/error.hpp"
#include "wsd/instances_io.hpp"
#include "wsd/metrics.hpp"

namespace wsd {
namespace {

SenseInventory load(const std::string& text) {
  std::istringstream in(text);
  return load_dictionary(in);
}

std::string sense_json(const std::string& id, const std::vector<std::string>& examples) {
  std::string out = R"({"sense_id":")" + id + R"(","gloss":"glosa de )" + id +
                    R"(","examples":[)";
  for (std::size_t i = 0; i < examples.size(); ++i) {
    if (i > 0) out += ',';
    out += '"' + examples[i] + '"';
  }
  return out + "]}";
}

std::string entry_json(const std::string& lemma, const std::string& pos,
                       const std::vector<std::string>& senses) {
  std::string out = R"({"lemma":")" + lemma + R"(","pos":")" + pos + R"(","senses":[)";
  for (std::size_t i = 0; i < senses.size(); ++i) {
    if (i > 0) out += ',';
    out += senses[i];
  }
  return out + "]}\n";
}

BuildConfig taza_config() {
  BuildConfig config;
  config.first_sentence = 10699;
  return config;
}

TEST(BuildEvalCorpus, ReproducesTaza) {
  const SenseInventory inv = testing::taza_inventory();
  const LexiconAnnotator annotator = testing::taza_annotator(inv);
  const EvalBuild build = build_eval_corpus(inv, annotator, taza_config());

  const std::string xml = emit_corpus_xml(build.corpus);
  EXPECT_EQ(testing::sentence_block(xml, "d001.s10699"),
            testing::lines_of(testing::read_data("taza_sentence.xml")));
  EXPECT_EQ(xml, testing::read_data("taza_corpus.xml"));
  EXPECT_EQ(emit_gold(build.gold), "d001.s10699.t0001 A121616\n");
  EXPECT_EQ(build.log.sentences, 1u);
  // Three taza senses carry no usage example.
  EXPECT_EQ(build.log.skips.size(), 3u);
}

TEST(BuildEvalCorpus, SenseWithoutExamplesIsSkipped) {
  const SenseInventory inv =
      load(entry_json("gato", "NOUN", {sense_json("G1", {})}));
  const EvalBuild build = build_eval_corpus(inv, NaiveAnnotator(&inv), BuildConfig{});
  EXPECT_EQ(build.corpus.sentence_count(), 0u);
  EXPECT_TRUE(build.corpus.documents.empty());
  ASSERT_EQ(build.log.skips.size(), 1u);
  EXPECT_EQ(build.log.skips[0].sense_id, "G1");
  EXPECT_EQ(build.log.skips[0].reason, "no usage examples");
}

TEST(BuildEvalCorpus, OneSentencePerMatchingExample) {
  std::string dump;
  std::size_t expected = 0;  // oracle: (sense, example) pairs whose text has the lemma
  for (const std::string lemma : {"banco", "gato", "hoja"}) {
    std::vector<std::string> senses;
    for (int s = 0; s < 2; ++s) {
      const std::string example = "Vi el " + lemma + " ayer";
      senses.push_back(sense_json(lemma + std::to_string(s), {example}));
      if (example.find(lemma) != std::string::npos) ++expected;
    }
    dump += entry_json(lemma, "NOUN", senses);
  }
  const SenseInventory inv = load(dump);
  const EvalBuild build = build_eval_corpus(inv, NaiveAnnotator(&inv), BuildConfig{});
  EXPECT_EQ(expected, 6u);
  EXPECT_EQ(build.corpus.sentence_count(), expected);
  EXPECT_EQ(build.gold.size(), expected);
  EXPECT_EQ(build.corpus.documents[0].sentences[0].id, "d001.s00001");
  EXPECT_TRUE(validate(build.corpus, build.gold, &inv).clean());
}

TEST(BuildEvalCorpus, LemmaNotFoundAndAnnotatorFailureAreLogged) {
  struct Throwing : Annotator {
    std::vector<AnnotatedToken> tokenize(std::string_view text) const override {
      if (text.find("boom") != std::string_view::npos) throw std::runtime_error("boom");
      return naive_annotate(text, nullptr);
    }
  };
  const SenseInventory inv = load(entry_json(
      "gato", "NOUN", {sense_json("G1", {"un perro", "boom", "el gato duerme"})}));
  const EvalBuild build = build_eval_corpus(inv, Throwing{}, BuildConfig{});
  EXPECT_EQ(build.corpus.sentence_count(), 1u);
  ASSERT_EQ(build.log.skips.size(), 2u);
  EXPECT_EQ(build.log.skips[0].reason, "headword not found in example");
  EXPECT_EQ(build.log.skips[0].example_index, 0u);
  EXPECT_NE(build.log.skips[1].reason.find("annotator failed"), std::string::npos);
}

TEST(BuildEvalCorpus, MultiwordHeadwords) {
  const SenseInventory inv =
      load(entry_json("a la par", "ADV", {sense_json("M1", {"Corrían a la par siempre"})}) +
           entry_json("gato", "NOUN", {sense_json("G1", {"El gato"})}));
  const EvalBuild skipped = build_eval_corpus(inv, NaiveAnnotator(&inv), BuildConfig{});
  EXPECT_EQ(skipped.corpus.sentence_count(), 1u);
  EXPECT_EQ(skipped.log.skips.front().reason, "multiword headword");
  // Default shape: single words only, no entities.
  const CorpusStats stats = corpus_stats(skipped.corpus, skipped.gold, inv);
  EXPECT_EQ(stats.mw, 0u);
  EXPECT_EQ(stats.entities, 0u);
  EXPECT_EQ(stats.sw, stats.instances);

  BuildConfig keep;
  keep.skip_multiword = false;
  const EvalBuild kept = build_eval_corpus(inv, NaiveAnnotator(&inv), keep);
  ASSERT_EQ(kept.corpus.sentence_count(), 2u);
  const Token* mw = kept.corpus.instances()[0];
  EXPECT_EQ(mw->surface, "a la par");
  EXPECT_EQ(mw->lemma, "a la par");
  EXPECT_EQ(kept.corpus.documents[0].sentences[0].tokens.size(), 3u);
  EXPECT_EQ(corpus_stats(kept.corpus, kept.gold, inv).mw, 1u);
}

TEST(BuildConfig, RejectsSmallK) {
  BuildConfig config;
  config.k = 1;
  const SenseInventory inv = testing::taza_inventory();
  EXPECT_THROW(build_eval_corpus(inv, NaiveAnnotator(&inv), config), DataError);
}

TEST(SampleDistractors, Basics) {
  const SenseInventory inv = testing::taza_inventory();
  Rng rng(1);
  EXPECT_TRUE(sample_distractors(inv, "taza", PosTag::noun(), "A121616", 0, rng,
                                 DistractorPolicy::kSameLemmaFirst)
                  .empty());
  const std::vector<SenseEntry> three = sample_distractors(
      inv, "taza", PosTag::noun(), "A121616", 3, rng, DistractorPolicy::kSameLemmaFirst);
  std::set<std::string> ids;
  for (const SenseEntry& s : three) ids.insert(s.sense_id);
  EXPECT_EQ(ids, (std::set<std::string>{"A183451", "A22450", "A139788"}));
  try {
    sample_distractors(inv, "taza", PosTag::noun(), "A121616", 4, rng,
                       DistractorPolicy::kSameLemmaFirst);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("short by 1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(sample_distractors(inv, "taza", PosTag::noun(), "A121616", 1, rng,
                                  DistractorPolicy::kCrossLemma),
               DataError);
}

TEST(SampleDistractors, TwoSenseLemmaFillsFromOtherLemmas) {
  const SenseInventory inv =
      load(entry_json("copa", "NOUN", {sense_json("C1", {}), sense_json("C2", {})}) +
           entry_json("banco", "NOUN", {sense_json("B1", {}), sense_json("B2", {})}) +
           entry_json("gato", "NOUN", {sense_json("G1", {})}) +
           entry_json("correr", "VERB", {sense_json("V1", {})}));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const std::vector<SenseEntry> picked = sample_distractors(
        inv, "copa", PosTag::noun(), "C1", 3, rng, DistractorPolicy::kSameLemmaFirst);
    ASSERT_EQ(picked.size(), 3u);
    std::set<std::string> ids;
    std::size_t same = 0;
    for (const SenseEntry& s : picked) {
      ids.insert(s.sense_id);
      const auto where = inv.locate(s.sense_id);
      ASSERT_TRUE(where);
      ASSERT_EQ(where->key.pos, PosTag::noun());
      if (where->key.lemma == "copa") ++same;
    }
    ASSERT_EQ(ids.size(), 3u);
    ASSERT_EQ(ids.count("C1"), 0u);
    ASSERT_EQ(same, 1u);
  }
}

TEST(BuildClassificationInstances, TazaInstance) {
  const SenseInventory inv = testing::taza_inventory();
  const EvalBuild build =
      build_eval_corpus(inv, testing::taza_annotator(inv), taza_config());
  const std::vector<ClassificationInstance> instances =
      build_classification_instances(build.corpus, build.gold, inv, BuildConfig{});
  ASSERT_EQ(instances.size(), 1u);
  const ClassificationInstance& inst = instances[0];
  std::set<std::string> ids;
  for (const Candidate& c : inst.candidates) ids.insert(c.sense_id);
  EXPECT_EQ(ids, (std::set<std::string>{"A183451", "A121616", "A22450", "A139788"}));
  EXPECT_EQ(inst.gold().sense_id, "A121616");
  EXPECT_EQ(inst.gold().gloss, "Cantidad que cabe en una taza.");
  EXPECT_EQ(inst.target_index, 1u);
  EXPECT_EQ(inst.context[inst.target_index].surface, "tazas");
  EXPECT_EQ(inst.instance_id, "d001.s10699.t0001");
}

TEST(BuildClassificationInstances, MonosemousCrossLemma) {
  std::string dump = entry_json("gato", "NOUN", {sense_json("G1", {"el gato"})});
  for (const std::string lemma : {"banco", "copa", "hoja", "mesa"}) {
    dump += entry_json(lemma, "NOUN", {sense_json(lemma + "1", {}), sense_json(lemma + "2", {})});
  }
  dump += entry_json("correr", "VERB", {sense_json("V1", {}), sense_json("V2", {})});
  const SenseInventory inv = load(dump);
  const EvalBuild build = build_eval_corpus(inv, NaiveAnnotator(&inv), BuildConfig{});
  BuildConfig config;
  config.policy = DistractorPolicy::kCrossLemma;
  const auto instances = build_classification_instances(build.corpus, build.gold, inv, config);
  ASSERT_EQ(instances.size(), 1u);
  ASSERT_EQ(instances[0].candidates.size(), 4u);
  EXPECT_EQ(instances[0].gold().sense_id, "G1");
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == instances[0].label) continue;
    const auto where = inv.locate(instances[0].candidates[i].sense_id);
    ASSERT_TRUE(where);
    EXPECT_NE(where->key.lemma, "gato");
    EXPECT_EQ(where->key.pos, PosTag::noun());
  }
}

TEST(BuildClassificationInstances, Deterministic) {
  const SenseInventory inv = testing::taza_inventory();
  const EvalBuild build =
      build_eval_corpus(inv, testing::taza_annotator(inv), taza_config());
  BuildConfig config;
  config.seed = 42;
  EXPECT_EQ(build_classification_instances(build.corpus, build.gold, inv, config),
            build_classification_instances(build.corpus, build.gold, inv, config));
}

TEST(BuildClassificationInstances, MissingLemmaListsIds) {
  const SenseInventory inv = testing::taza_inventory();
  const Corpus corpus = parse_corpus_xml(
      "<corpus lang=\"es\"><text id=\"d1\"><sentence id=\"d1.s1\">"
      "<instance id=\"d1.s1.t1\" lemma=\"perro\" pos=\"NOUN\">perro</instance>"
      "<instance id=\"d1.s1.t2\" lemma=\"gato\" pos=\"NOUN\">gato</instance>"
      "</sentence></text></corpus>");
  try {
    build_classification_instances(corpus, parse_gold("d1.s1.t1 X\nd1.s1.t2 Y\n"), inv,
                                   BuildConfig{});
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("d1.s1.t1, d1.s1.t2"), std::string::npos)
        << e.what();
  }
}

// Every emitted instance carries its gold among min(k, available) distinct
// candidates, and the builder's own output validates cleanly.
TEST(BuilderProperty, KContractAndCleanValidation) {
  Rng rng(314);
  const std::vector<std::string> lemmas = {"banco", "copa", "gato", "hoja", "mesa",
                                           "planta", "taza"};
  for (int trial = 0; trial < 60; ++trial) {
    std::string dump;
    std::size_t next = 0;
    for (const std::string& lemma : lemmas) {
      if (testing::draw(rng, 3) == 0) continue;
      const std::string pos = testing::draw(rng, 2) == 0 ? "NOUN" : "VERB";
      std::vector<std::string> senses;
      const std::size_t n = 1 + testing::draw(rng, 5);
      for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::string> examples;
        if (testing::draw(rng, 3) != 0) examples.push_back("una " + lemma + " roja");
        if (testing::draw(rng, 4) == 0) examples.push_back("nada");
        senses.push_back(sense_json("S" + std::to_string(next++), examples));
      }
      dump += entry_json(lemma, pos, senses);
    }
    const SenseInventory inv = load(dump);
    BuildConfig config;
    config.k = 2 + testing::draw(rng, 5);
    config.seed = rng();
    config.policy = testing::draw(rng, 2) == 0 ? DistractorPolicy::kSameLemmaFirst
                                               : DistractorPolicy::kCrossLemma;
    const EvalBuild build = build_eval_corpus(inv, NaiveAnnotator(&inv), config);
    ASSERT_TRUE(validate(build.corpus, build.gold, &inv).clean());
    const auto instances = build_classification_instances(build.corpus, build.gold, inv, config);
    ASSERT_EQ(instances.size(), build.corpus.instance_count());
    for (const ClassificationInstance& inst : instances) {
      check_instance(inst);
      const LexicalEntry* entry = inv.lookup(inst.lemma, inst.pos);
      ASSERT_NE(entry, nullptr);
      // Oracle for "available": count directly from the inventory.
      std::size_t available = 0;
      for (const auto& [key, other] : inv.entries()) {
        if (key.pos != inst.pos) continue;
        if (key.lemma != inst.lemma) {
          available += other.senses.size();
        } else if (config.policy == DistractorPolicy::kSameLemmaFirst) {
          available += other.senses.size() - 1;
        }
      }
      ASSERT_EQ(inst.candidates.size(), std::min(config.k, available + 1));
      ASSERT_EQ(inst.gold().sense_id, build.gold.at(inst.instance_id).front());
    }
  }
}

TEST(InstancesIo, RoundTripAndErrors) {
  const SenseInventory inv = testing::taza_inventory();
  const EvalBuild build =
      build_eval_corpus(inv, testing::taza_annotator(inv), taza_config());
  const auto instances = build_classification_instances(build.corpus, build.gold, inv, BuildConfig{});
  std::stringstream io;
  write_instances(io, instances);
  EXPECT_EQ(read_instances(io), instances);
  EXPECT_EQ(encode_instance(instances[0]).rfind(R"({"id":"d001.s10699.t0001","lemma":"taza")", 0),
            0u);

  std::istringstream bad_label(
      R"({"id":"x","lemma":"a","pos":"NOUN","target":0,"context":[{"surface":"a","lemma":"a","pos":"NOUN"}],"candidates":[{"sense_id":"s","gloss":"g"}],"label":3})");
  EXPECT_THROW(read_instances(bad_label), FormatError);
  std::istringstream truncated(R"({"id":"x")");
  EXPECT_THROW(read_instances(truncated), FormatError);
}

}  // namespace
}  // namespace wsd
