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

#ifndef WSD_METRICS_HPP_
#define WSD_METRICS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "wsd/corpus.hpp"
#include "wsd/engines.hpp"
#include "wsd/inventory.hpp"

namespace wsd {

struct ScoreCounts {
  std::size_t total = 0;
  std::size_t attempted = 0;
  std::size_t correct = 0;
  double precision = 0.0;  // correct / attempted, 0 when nothing attempted
  double recall = 0.0;     // correct / total
  double f1 = 0.0;         // 2PR / (P + R), 0 when P + R = 0

  static ScoreCounts from(std::size_t total, std::size_t attempted,
                          std::size_t correct);
  friend bool operator==(const ScoreCounts&, const ScoreCounts&) = default;
};

struct ScoreReport : ScoreCounts {
  std::map<std::string, ScoreCounts> per_pos;
};

// A prediction is correct when its sense is one of the instance's gold senses.
// total is the number of gold instances. instance_pos (id -> tag) drives the
// per-pos split and may be null. Throws DataError listing predictions for ids
// absent from the gold keys, and repeated predictions for one id.
ScoreReport score(const std::vector<Prediction>& predictions,
                  const GoldKeys& gold,
                  const std::map<std::string, PosTag>* instance_pos = nullptr);

std::map<std::string, PosTag> instance_pos_map(const Corpus& corpus);

// Descriptive statistics of an evaluation corpus against an inventory.
//   WT   distinct (lemma, pos) among instances
//   WAP  mean polysemy over those word types
//   IAP  mean polysemy over instances (MSI is the same quantity)
//   PW   word types with more than one sense
//   MSL  mean lemma polysemy (all parts of speech) over distinct lemmas
//   SW/MW  instances whose surface has no / some whitespace; entities are
//          counted separately through the entity marker
struct CorpusStats {
  std::size_t instances = 0;
  std::size_t word_types = 0;
  double wap = 0.0;
  double iap = 0.0;
  std::size_t pw = 0;
  std::size_t sw = 0;
  std::size_t mw = 0;
  std::size_t entities = 0;
  double msi = 0.0;
  double msl = 0.0;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

// Throws DataError listing instance ids whose (lemma, pos) is not in the
// inventory or that have no gold key.
CorpusStats corpus_stats(const Corpus& corpus, const GoldKeys& gold,
                         const SenseInventory& inventory);

}  // namespace wsd

#endif  // WSD_METRICS_HPP_
