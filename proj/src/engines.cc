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

#include "wsd/engines.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <sstream>

#include "wsd/annotate.hpp"
#include "wsd/error.hpp"
#include "wsd/text.hpp"

namespace wsd {

std::string to_string(ChunkMode mode) {
  return mode == ChunkMode::kGlobal ? "global" : "tournament";
}

ChunkMode parse_chunk_mode(std::string_view text) {
  if (text == "global") return ChunkMode::kGlobal;
  if (text == "tournament") return ChunkMode::kTournament;
  throw InputError("unknown chunk mode '" + std::string(text) + "'");
}

namespace {

struct Winner {
  std::size_t index;  // into the instance's candidate list
  double score;
};

// Scores `indices` (positions in instance.candidates) chunk by chunk and
// returns each chunk's winner. Scorer exceptions other than EngineError
// propagate as Abstention.
std::vector<Winner> run_chunks(Scorer& scorer,
                               const ClassificationInstance& instance,
                               const std::vector<std::size_t>& indices,
                               std::size_t chunk_size,
                               std::size_t& calls) {
  std::vector<Winner> winners;
  std::vector<Candidate> chunk;
  for (std::size_t begin = 0; begin < indices.size(); begin += chunk_size) {
    const std::size_t end = std::min(begin + chunk_size, indices.size());
    chunk.clear();
    for (std::size_t i = begin; i < end; ++i) {
      chunk.push_back(instance.candidates[indices[i]]);
    }
    ScoringRequest request;
    request.id = instance.instance_id;
    request.context = instance.context;
    request.target_index = instance.target_index;
    request.lemma = instance.lemma;
    request.pos = instance.pos;
    request.candidates = chunk;
    request.chunk_index = calls++;

    std::vector<double> scores;
    try {
      scores = scorer.score_chunk(request);
    } catch (const EngineError&) {
      throw;
    } catch (const Abstention&) {
      throw;
    } catch (const std::exception& e) {
      throw Abstention(scorer.name() + " failed: " + e.what());
    }
    if (scores.size() != chunk.size()) {
      throw EngineError(scorer.name() + " returned " +
                        std::to_string(scores.size()) + " scores for " +
                        std::to_string(chunk.size()) + " candidates of " +
                        instance.instance_id);
    }
    Winner best{indices[begin], scores[0]};
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (!std::isfinite(scores[i])) {
        throw EngineError(scorer.name() + " returned a non-finite score for " +
                          instance.instance_id);
      }
      if (scores[i] > best.score) best = {indices[begin + i], scores[i]};
    }
    winners.push_back(best);
  }
  return winners;
}

}  // namespace

Prediction disambiguate(Scorer& scorer, const ClassificationInstance& instance,
                        std::size_t chunk_size, ChunkMode mode) {
  if (chunk_size == 0) throw InputError("chunk size must be at least 1");
  Prediction prediction;
  prediction.instance_id = instance.instance_id;
  if (instance.candidates.empty()) {
    prediction.abstained = true;
    prediction.reason = "no candidate senses";
    return prediction;
  }

  std::vector<std::size_t> indices(instance.candidates.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;

  try {
    std::size_t calls = 0;
    std::vector<Winner> winners =
        run_chunks(scorer, instance, indices, chunk_size, calls);
    if (mode == ChunkMode::kTournament) {
      // Later rounds need at least two candidates per chunk to make progress.
      const std::size_t round_size = std::max<std::size_t>(chunk_size, 2);
      while (winners.size() > 1) {
        indices.clear();
        for (const Winner& w : winners) indices.push_back(w.index);
        winners = run_chunks(scorer, instance, indices, round_size, calls);
      }
    }
    Winner best = winners.front();
    for (const Winner& w : winners) {
      if (w.score > best.score) best = w;
    }
    prediction.sense_id = instance.candidates[best.index].sense_id;
    prediction.score = best.score;
  } catch (const Abstention& e) {
    prediction.abstained = true;
    prediction.sense_id.clear();
    prediction.score = 0.0;
    prediction.reason = e.what();
  }
  return prediction;
}

std::vector<double> mfs_score(const SenseInventory& inventory,
                              std::string_view lemma, const PosTag& pos,
                              std::span<const Candidate> candidates) {
  const LexicalEntry* entry = inventory.lookup(lemma, pos);
  if (entry == nullptr) {
    throw Abstention("mfs: " + std::string(lemma) + "#" + pos.str() +
                     " not in inventory");
  }
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const Candidate& candidate : candidates) {
    const std::optional<std::size_t> position = entry->position_of(candidate.sense_id);
    scores.push_back(position ? 0.0 - static_cast<double>(*position)
                              : std::numeric_limits<double>::lowest());
  }
  return scores;
}

std::vector<double> MfsScorer::score_chunk(const ScoringRequest& request) {
  return mfs_score(inventory_, request.lemma, request.pos, request.candidates);
}

std::size_t lesk_overlap(std::span<const std::string> context_lemmas,
                         std::span<const std::string> gloss_lemmas,
                         const std::set<std::string, std::less<>>& stopwords,
                         std::string_view target_lemma) {
  std::map<std::string_view, std::size_t> context_counts;
  for (const std::string& lemma : context_lemmas) {
    if (stopwords.count(lemma) != 0 || lemma == target_lemma) continue;
    ++context_counts[lemma];
  }
  std::map<std::string_view, std::size_t> gloss_counts;
  for (const std::string& lemma : gloss_lemmas) {
    if (stopwords.count(lemma) != 0 || lemma == target_lemma) continue;
    ++gloss_counts[lemma];
  }
  std::size_t overlap = 0;
  for (const auto& [lemma, count] : context_counts) {
    auto it = gloss_counts.find(lemma);
    if (it != gloss_counts.end()) overlap += std::min(count, it->second);
  }
  return overlap;
}

const std::set<std::string, std::less<>>& default_spanish_stopwords() {
  static const std::set<std::string, std::less<>> words = {
      "a",     "al",    "algo",  "ante",  "como",  "con",   "cual",  "de",
      "del",   "desde", "donde", "el",    "ella",  "ellos", "en",    "entre",
      "era",   "es",    "esa",   "ese",   "eso",   "esta",  "este",  "esto",
      "fue",   "ha",    "hacia", "hasta", "la",    "las",   "le",    "les",
      "lo",    "los",   "mas",   "más",   "me",    "mi",    "muy",   "ni",
      "no",    "nos",   "o",     "para",  "pero",  "por",   "que",   "qué",
      "se",    "sea",   "ser",   "si",    "sin",   "sobre", "su",    "sus",
      "también", "tan", "te",    "u",     "un",    "una",   "uno",   "unos",
      "unas",  "y",     "ya",    "yo"};
  return words;
}

std::set<std::string, std::less<>> load_stopwords(std::istream& in) {
  std::set<std::string, std::less<>> words;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view word = trim(line.substr(0, line.find('#')));
    if (!word.empty()) words.insert(normalize_lemma(word));
  }
  return words;
}

std::vector<std::string> context_lemmas(std::span<const ContextToken> context) {
  std::vector<std::string> lemmas;
  lemmas.reserve(context.size());
  for (const ContextToken& token : context) {
    lemmas.push_back(
        normalize_lemma(token.lemma.empty() ? token.surface : token.lemma));
  }
  return lemmas;
}

std::vector<std::string> gloss_lemmas(std::string_view gloss,
                                      const SenseInventory* inventory) {
  std::vector<std::string> lemmas;
  for (AnnotatedToken& token : naive_annotate(gloss, inventory)) {
    lemmas.push_back(std::move(token.lemma));
  }
  return lemmas;
}

std::vector<double> LeskScorer::score_chunk(const ScoringRequest& request) {
  const std::vector<std::string> context = context_lemmas(request.context);
  const std::string target = normalize_lemma(request.lemma);
  std::vector<double> scores;
  scores.reserve(request.candidates.size());
  for (const Candidate& candidate : request.candidates) {
    const std::vector<std::string> gloss = gloss_lemmas(candidate.gloss, &inventory_);
    scores.push_back(
        static_cast<double>(lesk_overlap(context, gloss, stopwords_, target)));
  }
  return scores;
}

EmbeddingTable::EmbeddingTable(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw DataError("embedding dimension must be positive");
}

void EmbeddingTable::add(std::string_view lemma, std::vector<double> vector) {
  if (vector.size() != dimension_) {
    throw DataError("vector for '" + std::string(lemma) + "' has dimension " +
                    std::to_string(vector.size()) + ", expected " +
                    std::to_string(dimension_));
  }
  vectors_.insert_or_assign(normalize_lemma(lemma), std::move(vector));
}

const std::vector<double>* EmbeddingTable::find(std::string_view lemma) const {
  auto it = vectors_.find(lemma);
  return it == vectors_.end() ? nullptr : &it->second;
}

EmbeddingTable load_embeddings(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::pair<std::string, std::vector<double>>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> fields = split_fields(line);
    if (fields.empty()) continue;
    if (line_no == 1 && fields.size() == 2 &&
        fields[0].find_first_not_of("0123456789") == std::string::npos &&
        fields[1].find_first_not_of("0123456789") == std::string::npos) {
      continue;  // word2vec header
    }
    if (fields.size() < 2) {
      throw FormatError("embeddings line " + std::to_string(line_no) +
                        ": expected 'word v1 ... vd'");
    }
    std::vector<double> vector;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      try {
        std::size_t used = 0;
        vector.push_back(std::stod(fields[i], &used));
        if (used != fields[i].size()) throw std::invalid_argument(fields[i]);
      } catch (const std::exception&) {
        throw FormatError("embeddings line " + std::to_string(line_no) +
                          ": bad number '" + fields[i] + "'");
      }
    }
    rows.emplace_back(std::move(fields[0]), std::move(vector));
  }
  if (rows.empty()) throw FormatError("embeddings file has no vectors");
  EmbeddingTable table(rows.front().second.size());
  for (auto& [word, vector] : rows) table.add(word, std::move(vector));
  return table;
}

namespace {

// Mean of the known vectors; empty when none is known.
std::vector<double> mean_vector(const EmbeddingTable& table,
                                std::span<const std::string> lemmas) {
  std::vector<double> sum(table.dimension(), 0.0);
  std::size_t known = 0;
  for (const std::string& lemma : lemmas) {
    const std::vector<double>* v = table.find(lemma);
    if (v == nullptr) continue;
    ++known;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += (*v)[i];
  }
  if (known == 0) return {};
  for (double& x : sum) x /= static_cast<double>(known);
  return sum;
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return 0.0;
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

std::vector<double> vector_score(
    const EmbeddingTable& table, std::span<const std::string> context_lemmas,
    std::span<const std::vector<std::string>> candidate_gloss_lemmas) {
  const std::vector<double> context = mean_vector(table, context_lemmas);
  std::vector<double> scores;
  scores.reserve(candidate_gloss_lemmas.size());
  for (const std::vector<std::string>& gloss : candidate_gloss_lemmas) {
    scores.push_back(cosine(context, mean_vector(table, gloss)));
  }
  return scores;
}

std::vector<double> VectorScorer::score_chunk(const ScoringRequest& request) {
  const std::vector<std::string> context = context_lemmas(request.context);
  std::vector<std::vector<std::string>> glosses;
  glosses.reserve(request.candidates.size());
  for (const Candidate& candidate : request.candidates) {
    glosses.push_back(gloss_lemmas(candidate.gloss, inventory_));
  }
  return vector_score(table_, context, glosses);
}

std::vector<double> MfsBackoff::score_chunk(const ScoringRequest& request) {
  try {
    return inner_.score_chunk(request);
  } catch (const Abstention&) {
    return mfs_score(inventory_, request.lemma, request.pos, request.candidates);
  }
}

}  // namespace wsd
