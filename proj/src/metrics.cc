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

#include <algorithm>
#include <set>

#include "wsd/error.hpp"
#include "wsd/text.hpp"

namespace wsd {

ScoreCounts ScoreCounts::from(std::size_t total, std::size_t attempted,
                              std::size_t correct) {
  ScoreCounts counts;
  counts.total = total;
  counts.attempted = attempted;
  counts.correct = correct;
  counts.precision =
      attempted == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(attempted);
  counts.recall =
      total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
  const double sum = counts.precision + counts.recall;
  counts.f1 = sum == 0.0 ? 0.0 : 2.0 * counts.precision * counts.recall / sum;
  return counts;
}

namespace {

struct Tally {
  std::size_t total = 0;
  std::size_t attempted = 0;
  std::size_t correct = 0;
};

std::string join(const std::vector<std::string>& ids) {
  std::string out;
  for (const std::string& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

ScoreReport score(const std::vector<Prediction>& predictions,
                  const GoldKeys& gold,
                  const std::map<std::string, PosTag>* instance_pos) {
  std::vector<std::string> unknown;
  std::vector<std::string> repeated;
  std::set<std::string_view> seen;
  for (const Prediction& p : predictions) {
    if (gold.count(p.instance_id) == 0) unknown.push_back(p.instance_id);
    if (!seen.insert(p.instance_id).second) repeated.push_back(p.instance_id);
  }
  if (!unknown.empty()) {
    throw DataError("predictions for unknown instances: " + join(unknown));
  }
  if (!repeated.empty()) {
    throw DataError("repeated predictions for: " + join(repeated));
  }

  const auto pos_of = [&](const std::string& id) -> std::string {
    if (instance_pos == nullptr) return {};
    auto it = instance_pos->find(id);
    return it == instance_pos->end() ? std::string("UNK") : it->second.str();
  };

  Tally all;
  std::map<std::string, Tally> by_pos;
  all.total = gold.size();
  if (instance_pos != nullptr) {
    for (const auto& [id, senses] : gold) ++by_pos[pos_of(id)].total;
  }
  for (const Prediction& p : predictions) {
    if (p.abstained) continue;
    const std::vector<std::string>& keys = gold.at(p.instance_id);
    const bool correct =
        std::find(keys.begin(), keys.end(), p.sense_id) != keys.end();
    ++all.attempted;
    all.correct += correct ? 1 : 0;
    if (instance_pos != nullptr) {
      Tally& t = by_pos[pos_of(p.instance_id)];
      ++t.attempted;
      t.correct += correct ? 1 : 0;
    }
  }

  ScoreReport report;
  static_cast<ScoreCounts&>(report) =
      ScoreCounts::from(all.total, all.attempted, all.correct);
  for (const auto& [pos, t] : by_pos) {
    report.per_pos[pos] = ScoreCounts::from(t.total, t.attempted, t.correct);
  }
  return report;
}

std::map<std::string, PosTag> instance_pos_map(const Corpus& corpus) {
  std::map<std::string, PosTag> out;
  for (const Token* token : corpus.instances()) out[token->instance_id] = token->pos;
  return out;
}

CorpusStats corpus_stats(const Corpus& corpus, const GoldKeys& gold,
                         const SenseInventory& inventory) {
  std::vector<std::string> unknown;
  std::vector<std::string> unkeyed;
  std::map<EntryKey, std::size_t> type_polysemy;
  std::map<std::string, std::size_t> lemma_polysemy;
  CorpusStats stats;
  double instance_sum = 0.0;

  for (const Token* token : corpus.instances()) {
    const std::size_t senses = inventory.polysemy(token->lemma, token->pos);
    if (senses == 0) {
      unknown.push_back(token->instance_id);
      continue;
    }
    if (gold.count(token->instance_id) == 0) {
      unkeyed.push_back(token->instance_id);
      continue;
    }
    ++stats.instances;
    instance_sum += static_cast<double>(senses);
    const std::string lemma = normalize_lemma(token->lemma);
    type_polysemy.emplace(EntryKey{lemma, token->pos}, senses);
    lemma_polysemy.emplace(lemma, inventory.lemma_polysemy(lemma));
    if (token->entity) {
      ++stats.entities;
    } else if (contains_space(token->surface)) {
      ++stats.mw;
    } else {
      ++stats.sw;
    }
  }
  if (!unknown.empty() || !unkeyed.empty()) {
    std::string message;
    if (!unknown.empty()) {
      message = "instances whose lemma is not in the inventory: " + join(unknown);
    }
    if (!unkeyed.empty()) {
      if (!message.empty()) message += "; ";
      message += "instances without gold keys: " + join(unkeyed);
    }
    throw DataError(message);
  }

  stats.word_types = type_polysemy.size();
  double type_sum = 0.0;
  for (const auto& [key, senses] : type_polysemy) {
    type_sum += static_cast<double>(senses);
    if (senses > 1) ++stats.pw;
  }
  double lemma_sum = 0.0;
  for (const auto& [lemma, senses] : lemma_polysemy) {
    lemma_sum += static_cast<double>(senses);
  }
  if (stats.word_types > 0) {
    stats.wap = type_sum / static_cast<double>(stats.word_types);
  }
  if (stats.instances > 0) {
    stats.iap = instance_sum / static_cast<double>(stats.instances);
  }
  stats.msi = stats.iap;
  if (!lemma_polysemy.empty()) {
    stats.msl = lemma_sum / static_cast<double>(lemma_polysemy.size());
  }
  return stats;
}

}  // namespace wsd
