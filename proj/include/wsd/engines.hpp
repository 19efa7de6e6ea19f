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

#ifndef WSD_ENGINES_HPP_
#define WSD_ENGINES_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsd/builder.hpp"
#include "wsd/inventory.hpp"

namespace wsd {

// What a scorer sees for one chunk of candidates.
struct ScoringRequest {
  std::string_view id;
  std::span<const ContextToken> context;
  std::size_t target_index = 0;
  std::string_view lemma;
  PosTag pos;
  std::span<const Candidate> candidates;
  // Running count of score_chunk calls made for this instance.
  std::size_t chunk_index = 0;
};

// Candidate scorer. score_chunk returns one finite score per candidate, in
// candidate order; higher is better. Throwing Abstention (or any other
// non-EngineError exception) makes disambiguate() abstain on the instance.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::string name() const = 0;
  virtual std::vector<double> score_chunk(const ScoringRequest& request) = 0;
};

struct Prediction {
  std::string instance_id;
  std::string sense_id;  // empty when abstained
  double score = 0.0;
  bool abstained = false;
  std::string reason;  // why the engine abstained

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

enum class ChunkMode {
  kGlobal,      // argmax over the raw scores of every chunk
  kTournament,  // chunk winners are re-scored together until one chunk is left
};

std::string to_string(ChunkMode mode);
ChunkMode parse_chunk_mode(std::string_view text);

// Scores the candidates in consecutive chunks of at most chunk_size and
// returns the highest-scoring one; ties go to the lowest candidate index.
// A scorer that returns the wrong number of scores, or a non-finite score,
// raises EngineError. Instances without candidates abstain.
Prediction disambiguate(Scorer& scorer, const ClassificationInstance& instance,
                        std::size_t chunk_size,
                        ChunkMode mode = ChunkMode::kGlobal);

// Score = -order_index of the sense within the entry; senses from other
// entries get the lowest finite double. Abstains when the lemma is unknown.
class MfsScorer : public Scorer {
 public:
  explicit MfsScorer(const SenseInventory& inventory) : inventory_(inventory) {}
  std::string name() const override { return "mfs"; }
  std::vector<double> score_chunk(const ScoringRequest& request) override;

 private:
  const SenseInventory& inventory_;
};

std::vector<double> mfs_score(const SenseInventory& inventory,
                              std::string_view lemma, const PosTag& pos,
                              std::span<const Candidate> candidates);

// Size of the multiset intersection of the two bags once stopwords and the
// target lemma are removed from both.
std::size_t lesk_overlap(std::span<const std::string> context_lemmas,
                         std::span<const std::string> gloss_lemmas,
                         const std::set<std::string, std::less<>>& stopwords,
                         std::string_view target_lemma = {});

const std::set<std::string, std::less<>>& default_spanish_stopwords();
// One word per line; '#' starts a comment.
std::set<std::string, std::less<>> load_stopwords(std::istream& in);

// Gloss-overlap scorer. Glosses are lemmatized with the naive annotator
// backed by the inventory; context lemmas come from the instance tokens.
class LeskScorer : public Scorer {
 public:
  LeskScorer(const SenseInventory& inventory,
             std::set<std::string, std::less<>> stopwords =
                 default_spanish_stopwords())
      : inventory_(inventory), stopwords_(std::move(stopwords)) {}
  std::string name() const override { return "lesk"; }
  std::vector<double> score_chunk(const ScoringRequest& request) override;

 private:
  const SenseInventory& inventory_;
  std::set<std::string, std::less<>> stopwords_;
};

class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }
  // Throws DataError on a dimension mismatch.
  void add(std::string_view lemma, std::vector<double> vector);
  const std::vector<double>* find(std::string_view lemma) const;

 private:
  std::size_t dimension_;
  std::map<std::string, std::vector<double>, std::less<>> vectors_;
};

// word2vec text format: an optional "count dim" header, then
// "word v1 .. vd" per line.
EmbeddingTable load_embeddings(std::istream& in);

// Cosine between the mean vector of the known context lemmas and the mean
// vector of the known gloss lemmas of each candidate; 0 when either side has
// no known lemma or a zero mean.
std::vector<double> vector_score(const EmbeddingTable& table,
                                 std::span<const std::string> context_lemmas,
                                 std::span<const std::vector<std::string>>
                                     candidate_gloss_lemmas);

class VectorScorer : public Scorer {
 public:
  VectorScorer(const EmbeddingTable& table, const SenseInventory* inventory)
      : table_(table), inventory_(inventory) {}
  std::string name() const override { return "vector"; }
  std::vector<double> score_chunk(const ScoringRequest& request) override;

 private:
  const EmbeddingTable& table_;
  const SenseInventory* inventory_;
};

// Engine composition: when the wrapped scorer abstains on a chunk, that chunk
// is scored by MFS instead. Abstains only when both do.
class MfsBackoff : public Scorer {
 public:
  MfsBackoff(Scorer& inner, const SenseInventory& inventory)
      : inner_(inner), inventory_(inventory) {}
  std::string name() const override { return inner_.name() + "+mfs"; }
  std::vector<double> score_chunk(const ScoringRequest& request) override;

 private:
  Scorer& inner_;
  const SenseInventory& inventory_;
};

// Lemmas of the context tokens, normalized; falls back to the surface when a
// token has no lemma.
std::vector<std::string> context_lemmas(std::span<const ContextToken> context);
std::vector<std::string> gloss_lemmas(std::string_view gloss,
                                      const SenseInventory* inventory);

}  // namespace wsd

#endif  // WSD_ENGINES_HPP_
