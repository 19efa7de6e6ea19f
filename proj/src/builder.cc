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

#include <cstdio>
#include <set>
#include <sstream>

#include "wsd/error.hpp"
#include "wsd/text.hpp"

namespace wsd {

namespace {

std::string numbered(const char* format, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, format, n);
  return buf;
}

std::vector<std::string> headword_parts(const std::string& lemma) {
  std::string spaced = lemma;
  for (char& c : spaced) {
    if (c == '_') c = ' ';
  }
  return split_fields(spaced);
}

// Position of the first token run matching the headword, or npos. Single
// words compare against token lemmas; multiword headwords also accept
// normalized surfaces so "a la par" matches without a multiword lemmatizer.
std::size_t locate_target(const std::vector<AnnotatedToken>& tokens,
                          const std::vector<std::string>& parts) {
  if (parts.empty() || tokens.size() < parts.size()) return std::string::npos;
  for (std::size_t i = 0; i + parts.size() <= tokens.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < parts.size() && match; ++j) {
      const AnnotatedToken& token = tokens[i + j];
      match = normalize_lemma(token.lemma) == parts[j] ||
              (parts.size() > 1 && normalize_lemma(token.surface) == parts[j]);
    }
    if (match) return i;
  }
  return std::string::npos;
}

}  // namespace

std::string to_string(DistractorPolicy policy) {
  return policy == DistractorPolicy::kSameLemmaFirst ? "same-lemma-first"
                                                     : "cross-lemma";
}

DistractorPolicy parse_distractor_policy(std::string_view text) {
  if (text == "same-lemma-first" || text == "SAME_LEMMA_FIRST") {
    return DistractorPolicy::kSameLemmaFirst;
  }
  if (text == "cross-lemma" || text == "CROSS_LEMMA") {
    return DistractorPolicy::kCrossLemma;
  }
  throw InputError("unknown distractor policy '" + std::string(text) + "'");
}

void BuildConfig::check() const {
  if (k < 2) throw DataError("k must be at least 2, got " + std::to_string(k));
  if (document_id.empty()) throw DataError("empty document id");
}

std::string BuildLog::render() const {
  std::ostringstream out;
  out << "entries\t" << entries << '\n'
      << "senses\t" << senses << '\n'
      << "examples\t" << examples << '\n'
      << "sentences\t" << sentences << '\n'
      << "skips\t" << skips.size() << '\n';
  for (const BuildSkip& skip : skips) {
    out << "skip\t" << skip.lemma << '#' << skip.pos.str() << '\t'
        << (skip.sense_id.empty() ? "-" : skip.sense_id) << '\t'
        << skip.example_index << '\t' << skip.reason << '\n';
  }
  return out.str();
}

EvalBuild build_eval_corpus(const SenseInventory& inventory,
                            const Annotator& annotator,
                            const BuildConfig& config) {
  config.check();
  EvalBuild build;
  build.corpus.lang = config.lang;
  Document doc;
  doc.id = config.document_id;
  std::size_t next_sentence = config.first_sentence;

  for (const auto& [key, entry] : inventory.entries()) {
    ++build.log.entries;
    if (entry.multiword() && config.skip_multiword) {
      build.log.skips.push_back(
          {entry.lemma, entry.pos, "", 0, "multiword headword"});
      continue;
    }
    const std::vector<std::string> parts = headword_parts(entry.lemma);
    for (const SenseEntry& sense : entry.senses) {
      ++build.log.senses;
      if (sense.usage_examples.empty()) {
        build.log.skips.push_back(
            {entry.lemma, entry.pos, sense.sense_id, 0, "no usage examples"});
        continue;
      }
      for (std::size_t e = 0; e < sense.usage_examples.size(); ++e) {
        ++build.log.examples;
        std::vector<AnnotatedToken> tokens;
        try {
          tokens = annotator.tokenize(sense.usage_examples[e]);
        } catch (const std::exception& error) {
          build.log.skips.push_back({entry.lemma, entry.pos, sense.sense_id, e,
                                     std::string("annotator failed: ") +
                                         error.what()});
          continue;
        }
        const std::size_t target = locate_target(tokens, parts);
        if (target == std::string::npos) {
          build.log.skips.push_back({entry.lemma, entry.pos, sense.sense_id, e,
                                     "headword not found in example"});
          continue;
        }

        Sentence sentence;
        sentence.id = doc.id + numbered(".s%05zu", next_sentence++);
        for (std::size_t i = 0; i < tokens.size(); ++i) {
          Token token;
          if (i == target) {
            token.kind = TokenKind::kInstance;
            token.instance_id = sentence.id + numbered(".t%04zu", 1);
            token.lemma = entry.lemma;
            token.pos = entry.pos;
            token.surface = tokens[i].surface;
            for (std::size_t j = 1; j < parts.size(); ++j) {
              token.surface += ' ';
              token.surface += tokens[i + j].surface;
            }
            i += parts.size() - 1;
            build.gold[token.instance_id] = {sense.sense_id};
          } else {
            token.surface = tokens[i].surface;
            token.lemma = tokens[i].lemma;
            token.pos = tokens[i].pos;
          }
          sentence.tokens.push_back(std::move(token));
        }
        doc.sentences.push_back(std::move(sentence));
        ++build.log.sentences;
      }
    }
  }
  if (!doc.sentences.empty()) build.corpus.documents.push_back(std::move(doc));
  return build;
}

DistractorSampler::DistractorSampler(const SenseInventory& inventory)
    : inventory_(inventory) {
  for (const auto& [key, entry] : inventory.entries()) {
    Bucket& bucket = buckets_[key.pos];
    bucket.entries.push_back(&entry);
    bucket.senses += entry.senses.size();
  }
}

std::size_t DistractorSampler::available(const LexicalEntry& entry,
                                         DistractorPolicy policy) const {
  auto it = buckets_.find(entry.pos);
  const std::size_t others =
      it == buckets_.end() ? 0 : it->second.senses - entry.senses.size();
  const std::size_t own =
      policy == DistractorPolicy::kSameLemmaFirst ? entry.senses.size() - 1 : 0;
  return own + others;
}

std::vector<SenseEntry> DistractorSampler::sample(
    const LexicalEntry& entry, std::string_view gold_sense_id, std::size_t n,
    Rng& rng, DistractorPolicy policy) const {
  std::vector<SenseEntry> picked;
  if (n == 0) return picked;

  std::vector<const SenseEntry*> own;
  for (const SenseEntry& sense : entry.senses) {
    if (sense.sense_id != gold_sense_id) own.push_back(&sense);
  }
  auto bucket_it = buckets_.find(entry.pos);
  const std::size_t cross = bucket_it == buckets_.end()
                                ? 0
                                : bucket_it->second.senses - entry.senses.size();
  const std::size_t supply =
      cross + (policy == DistractorPolicy::kSameLemmaFirst ? own.size() : 0);
  if (supply < n) {
    throw DataError("cannot sample " + std::to_string(n) +
                    " distractors for " + entry.lemma + "#" + entry.pos.str() +
                    ": only " + std::to_string(supply) + " available (short by " +
                    std::to_string(n - supply) + ")");
  }

  if (policy == DistractorPolicy::kSameLemmaFirst) {
    shuffle_in_place(own, rng);
    for (const SenseEntry* sense : own) {
      if (picked.size() == n) return picked;
      picked.push_back(*sense);
    }
  }
  if (picked.size() == n) return picked;

  // Uniform entry, then uniform sense within it, rejecting repeats. When the
  // remaining supply is nearly exhausted, rejection stalls; switch to an
  // explicit pool of what is left.
  const std::vector<const LexicalEntry*>& pool = bucket_it->second.entries;
  std::set<std::string_view> taken;
  std::size_t misses = 0;
  constexpr std::size_t kMaxMisses = 64;
  while (picked.size() < n && misses < kMaxMisses) {
    const LexicalEntry* other = pool[uniform_below(rng, pool.size())];
    if (other->lemma == entry.lemma) {
      ++misses;
      continue;
    }
    const SenseEntry& sense =
        other->senses[uniform_below(rng, other->senses.size())];
    if (!taken.insert(sense.sense_id).second) {
      ++misses;
      continue;
    }
    misses = 0;
    picked.push_back(sense);
  }
  if (picked.size() < n) {
    std::vector<std::pair<const LexicalEntry*, std::vector<std::size_t>>> rest;
    for (const LexicalEntry* other : pool) {
      if (other->lemma == entry.lemma) continue;
      std::vector<std::size_t> free;
      for (std::size_t i = 0; i < other->senses.size(); ++i) {
        if (taken.count(other->senses[i].sense_id) == 0) free.push_back(i);
      }
      if (!free.empty()) rest.emplace_back(other, std::move(free));
    }
    while (picked.size() < n) {
      const std::size_t e = uniform_below(rng, rest.size());
      auto& [other, free] = rest[e];
      const std::size_t s = uniform_below(rng, free.size());
      picked.push_back(other->senses[free[s]]);
      free.erase(free.begin() + static_cast<std::ptrdiff_t>(s));
      if (free.empty()) rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(e));
    }
  }
  return picked;
}

std::vector<SenseEntry> sample_distractors(const SenseInventory& inventory,
                                           std::string_view lemma,
                                           const PosTag& pos,
                                           std::string_view gold_sense_id,
                                           std::size_t n, Rng& rng,
                                           DistractorPolicy policy) {
  const LexicalEntry* entry = inventory.lookup(lemma, pos);
  if (entry == nullptr) {
    throw DataError(std::string(lemma) + "#" + pos.str() +
                    " is not in the inventory");
  }
  return DistractorSampler(inventory).sample(*entry, gold_sense_id, n, rng,
                                             policy);
}

Rng instance_rng(std::string_view instance_id, std::uint64_t seed) {
  return Rng(fnv1a64(instance_id) ^ seed);
}

namespace {

std::vector<ContextToken> context_of(const Sentence& sentence) {
  std::vector<ContextToken> context;
  context.reserve(sentence.tokens.size());
  for (const Token& token : sentence.tokens) {
    context.push_back({token.surface, token.lemma, token.pos});
  }
  return context;
}

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const std::string& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

std::vector<ClassificationInstance> build_classification_instances(
    const Corpus& corpus, const GoldKeys& gold, const SenseInventory& inventory,
    const BuildConfig& config) {
  config.check();
  const DistractorSampler sampler(inventory);
  std::vector<ClassificationInstance> out;
  std::vector<std::string> unknown_lemma, missing_key, foreign_gold;

  for (const Document& doc : corpus.documents) {
    for (const Sentence& sentence : doc.sentences) {
      std::vector<ContextToken> context;
      for (std::size_t t = 0; t < sentence.tokens.size(); ++t) {
        const Token& token = sentence.tokens[t];
        if (!token.is_instance()) continue;
        const LexicalEntry* entry = inventory.lookup(token.lemma, token.pos);
        if (entry == nullptr) {
          unknown_lemma.push_back(token.instance_id);
          continue;
        }
        auto key = gold.find(token.instance_id);
        if (key == gold.end()) {
          missing_key.push_back(token.instance_id);
          continue;
        }
        const std::string& gold_sense = key->second.front();
        const std::optional<std::size_t> gold_pos = entry->position_of(gold_sense);
        if (!gold_pos) {
          foreign_gold.push_back(token.instance_id);
          continue;
        }
        if (context.empty()) context = context_of(sentence);

        ClassificationInstance instance;
        instance.instance_id = token.instance_id;
        instance.context = context;
        instance.target_index = t;
        instance.lemma = entry->lemma;
        instance.pos = entry->pos;

        Rng rng = instance_rng(token.instance_id, config.seed);
        const std::size_t n =
            std::min(config.k - 1, sampler.available(*entry, config.policy));
        std::vector<Candidate> candidates;
        candidates.push_back({gold_sense, entry->senses[*gold_pos].gloss});
        for (SenseEntry& sense :
             sampler.sample(*entry, gold_sense, n, rng, config.policy)) {
          candidates.push_back({std::move(sense.sense_id), std::move(sense.gloss)});
        }
        shuffle_in_place(candidates, rng);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
          if (candidates[c].sense_id == gold_sense) instance.label = c;
        }
        instance.candidates = std::move(candidates);
        out.push_back(std::move(instance));
      }
    }
  }

  std::string problems;
  if (!unknown_lemma.empty()) {
    problems += "lemma not in inventory: " + join_ids(unknown_lemma) + "; ";
  }
  if (!missing_key.empty()) {
    problems += "no gold key: " + join_ids(missing_key) + "; ";
  }
  if (!foreign_gold.empty()) {
    problems += "gold sense not in entry: " + join_ids(foreign_gold) + "; ";
  }
  if (!problems.empty()) {
    problems.resize(problems.size() - 2);
    throw DataError(problems);
  }
  return out;
}

std::vector<ClassificationInstance> evaluation_instances(
    const Corpus& corpus, const SenseInventory& inventory) {
  std::vector<ClassificationInstance> out;
  for (const Document& doc : corpus.documents) {
    for (const Sentence& sentence : doc.sentences) {
      std::vector<ContextToken> context;
      for (std::size_t t = 0; t < sentence.tokens.size(); ++t) {
        const Token& token = sentence.tokens[t];
        if (!token.is_instance()) continue;
        if (context.empty()) context = context_of(sentence);
        ClassificationInstance instance;
        instance.instance_id = token.instance_id;
        instance.context = context;
        instance.target_index = t;
        instance.lemma = normalize_lemma(token.lemma);
        instance.pos = token.pos;
        if (const LexicalEntry* entry = inventory.lookup(token.lemma, token.pos)) {
          for (const SenseEntry& sense : entry->senses) {
            instance.candidates.push_back({sense.sense_id, sense.gloss});
          }
        }
        out.push_back(std::move(instance));
      }
    }
  }
  return out;
}

}  // namespace wsd
