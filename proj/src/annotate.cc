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

#include "wsd/annotate.hpp"

#include <istream>

#include "wsd/error.hpp"
#include "wsd/inventory.hpp"
#include "wsd/text.hpp"

namespace wsd {

namespace {

bool has_lemma(const SenseInventory& inventory, const std::string& lemma) {
  return !lemma.empty() && !inventory.pos_of(lemma).empty();
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

PosTag preferred_pos(const SenseInventory& inventory, const std::string& lemma) {
  const std::vector<PosTag> tags = inventory.pos_of(lemma);
  for (const PosTag& wanted :
       {PosTag::noun(), PosTag::verb(), PosTag::adj(), PosTag::adv()}) {
    for (const PosTag& tag : tags) {
      if (tag == wanted) return tag;
    }
  }
  return PosTag::other();
}

}  // namespace

std::vector<AnnotatedToken> naive_annotate(std::string_view text,
                                           const SenseInventory* inventory) {
  std::vector<AnnotatedToken> tokens;
  for (std::string& word : split_words(text)) {
    AnnotatedToken token;
    token.lemma = normalize_lemma(word);
    token.pos = PosTag::other();
    if (inventory != nullptr) {
      if (!has_lemma(*inventory, token.lemma)) {
        for (std::string_view ending : {"es", "s"}) {
          if (!ends_with(token.lemma, ending)) continue;
          std::string stem =
              token.lemma.substr(0, token.lemma.size() - ending.size());
          if (has_lemma(*inventory, stem)) {
            token.lemma = std::move(stem);
            break;
          }
        }
      }
      token.pos = preferred_pos(*inventory, token.lemma);
    }
    token.surface = std::move(word);
    tokens.push_back(std::move(token));
  }
  return tokens;
}

void LexiconAnnotator::add(std::string_view form, std::string lemma, PosTag pos) {
  forms_.insert_or_assign(normalize_lemma(form),
                          Analysis{std::move(lemma), std::move(pos)});
}

std::vector<AnnotatedToken> LexiconAnnotator::tokenize(
    std::string_view text) const {
  std::vector<AnnotatedToken> tokens = fallback_.tokenize(text);
  for (AnnotatedToken& token : tokens) {
    auto it = forms_.find(normalize_lemma(token.surface));
    if (it == forms_.end()) continue;
    token.lemma = it->second.lemma;
    token.pos = it->second.pos;
  }
  return tokens;
}

void load_lexicon(std::istream& in, LexiconAnnotator& annotator) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 3) {
      throw FormatError("lexicon line " + std::to_string(line_no) +
                        ": expected 'form lemma POS'");
    }
    annotator.add(fields[0], normalize_lemma(fields[1]), PosTag(fields[2]));
  }
}

}  // namespace wsd
