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

#ifndef WSD_ANNOTATE_HPP_
#define WSD_ANNOTATE_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wsd/pos.hpp"

namespace wsd {

class SenseInventory;

struct AnnotatedToken {
  std::string surface;
  std::string lemma;
  PosTag pos;
  friend bool operator==(const AnnotatedToken&, const AnnotatedToken&) = default;
};

// Sentence tokenizer + lemmatizer + tagger. Implementations must be
// deterministic: equal input text yields an equal token list.
class Annotator {
 public:
  virtual ~Annotator() = default;
  virtual std::vector<AnnotatedToken> tokenize(std::string_view text) const = 0;
};

// Whitespace/punctuation tokenizer. The lemma is the normalized surface, or
// the surface without a plural "-es"/"-s" when only the stripped form is an
// inventory lemma. The tag comes from the inventory (NOUN, VERB, ADJ, ADV
// preference order) or is X.
std::vector<AnnotatedToken> naive_annotate(std::string_view text,
                                           const SenseInventory* inventory);

class NaiveAnnotator : public Annotator {
 public:
  explicit NaiveAnnotator(const SenseInventory* inventory = nullptr)
      : inventory_(inventory) {}
  std::vector<AnnotatedToken> tokenize(std::string_view text) const override {
    return naive_annotate(text, inventory_);
  }

 private:
  const SenseInventory* inventory_;
};

// Form lexicon in front of the naive annotator: words listed in the table
// take their lemma and tag from it, everything else falls through.
class LexiconAnnotator : public Annotator {
 public:
  struct Analysis {
    std::string lemma;
    PosTag pos;
  };

  explicit LexiconAnnotator(const SenseInventory* inventory = nullptr)
      : fallback_(inventory) {}

  void add(std::string_view form, std::string lemma, PosTag pos);
  std::size_t size() const { return forms_.size(); }

  std::vector<AnnotatedToken> tokenize(std::string_view text) const override;

 private:
  NaiveAnnotator fallback_;
  std::map<std::string, Analysis, std::less<>> forms_;
};

// Lexicon file: "form<TAB>lemma<TAB>POS" per line, '#' comments. Forms are
// matched case-insensitively.
void load_lexicon(std::istream& in, LexiconAnnotator& annotator);

}  // namespace wsd

#endif  // WSD_ANNOTATE_HPP_
