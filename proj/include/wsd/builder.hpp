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

#ifndef WSD_BUILDER_HPP_
#define WSD_BUILDER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wsd/annotate.hpp"
#include "wsd/corpus.hpp"
#include "wsd/inventory.hpp"
#include "wsd/random.hpp"

namespace wsd {

enum class DistractorPolicy {
  kSameLemmaFirst,  // other senses of the target entry, then other lemmas
  kCrossLemma,      // other lemmas only
};

std::string to_string(DistractorPolicy policy);
DistractorPolicy parse_distractor_policy(std::string_view text);

struct BuildConfig {
  std::size_t k = 4;  // candidates per classification instance, >= 2
  std::uint64_t seed = 0;
  bool skip_multiword = true;
  DistractorPolicy policy = DistractorPolicy::kSameLemmaFirst;
  std::string lang = "es";
  std::string document_id = "d001";
  // Number given to the first emitted sentence (d001.s00001 by default).
  std::size_t first_sentence = 1;

  void check() const;  // throws DataError when k < 2
};

struct BuildSkip {
  std::string lemma;
  PosTag pos;
  std::string sense_id;  // empty for entry-level skips
  std::size_t example_index = 0;
  std::string reason;
};

struct BuildLog {
  std::size_t entries = 0;
  std::size_t senses = 0;
  std::size_t examples = 0;
  std::size_t sentences = 0;
  std::vector<BuildSkip> skips;

  std::string render() const;
};

struct EvalBuild {
  Corpus corpus;
  GoldKeys gold;
  BuildLog log;
};

// One sentence per (entry, sense, usage example) whose annotation contains the
// headword lemma. The first matching token becomes the instance, keyed to the
// sense. Entries are visited in (lemma, pos) order and senses in listing
// order, so ids are a pure function of the inventory and config.
EvalBuild build_eval_corpus(const SenseInventory& inventory,
                            const Annotator& annotator, const BuildConfig& config);

struct Candidate {
  std::string sense_id;
  std::string gloss;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct ContextToken {
  std::string surface;
  std::string lemma;
  PosTag pos;
  friend bool operator==(const ContextToken&, const ContextToken&) = default;
};

struct ClassificationInstance {
  std::string instance_id;
  std::vector<ContextToken> context;
  std::size_t target_index = 0;
  std::string lemma;
  PosTag pos;
  std::vector<Candidate> candidates;
  std::size_t label = 0;

  const Candidate& gold() const { return candidates.at(label); }
  friend bool operator==(const ClassificationInstance&,
                         const ClassificationInstance&) = default;
};

// Per-pos index over an inventory for repeated distractor sampling. Holds
// pointers into the inventory, which must outlive it.
class DistractorSampler {
 public:
  explicit DistractorSampler(const SenseInventory& inventory);

  // Number of distinct distractors sample() can supply for a gold sense of
  // `entry`.
  std::size_t available(const LexicalEntry& entry, DistractorPolicy policy) const;

  std::vector<SenseEntry> sample(const LexicalEntry& entry,
                                 std::string_view gold_sense_id, std::size_t n,
                                 Rng& rng, DistractorPolicy policy) const;

 private:
  struct Bucket {
    std::vector<const LexicalEntry*> entries;  // (lemma, pos) order
    std::size_t senses = 0;
  };
  const SenseInventory& inventory_;
  std::map<PosTag, Bucket> buckets_;
};

// n distinct senses other than the gold one. SAME_LEMMA_FIRST draws the
// entry's other senses first (random order), then fills from uniformly chosen
// same-pos entries of other lemmas; CROSS_LEMMA only uses other lemmas.
// Throws DataError naming the shortfall when fewer than n exist.
std::vector<SenseEntry> sample_distractors(const SenseInventory& inventory,
                                           std::string_view lemma,
                                           const PosTag& pos,
                                           std::string_view gold_sense_id,
                                           std::size_t n, Rng& rng,
                                           DistractorPolicy policy);

// RNG for one instance: seeded from hash(instance_id) ^ seed.
Rng instance_rng(std::string_view instance_id, std::uint64_t seed);

// One instance per corpus instance, in corpus order: the first gold sense plus
// min(k - 1, available) distractors, shuffled by the per-instance RNG. Throws
// DataError listing the instance ids whose lemma is missing from the
// inventory, that lack a gold key, or whose gold sense is not in the entry.
std::vector<ClassificationInstance> build_classification_instances(
    const Corpus& corpus, const GoldKeys& gold, const SenseInventory& inventory,
    const BuildConfig& config);

// Instances for scoring a corpus against the full sense list of each entry.
// Instances whose lemma is unknown get an empty candidate list.
std::vector<ClassificationInstance> evaluation_instances(
    const Corpus& corpus, const SenseInventory& inventory);

}  // namespace wsd

#endif  // WSD_BUILDER_HPP_
