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

#ifndef WSD_CORPUS_HPP_
#define WSD_CORPUS_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wsd/pos.hpp"

namespace wsd {

class SenseInventory;

enum class TokenKind { kWordForm, kInstance };

struct Token {
  TokenKind kind = TokenKind::kWordForm;
  std::string surface;
  std::string lemma;
  PosTag pos;
  std::string instance_id;  // set iff kind == kInstance
  bool entity = false;      // named-entity marker, emitted as entity="1"

  bool is_instance() const { return kind == TokenKind::kInstance; }
  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::string id;
  std::vector<Token> tokens;
  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  friend bool operator==(const Document&, const Document&) = default;
};

struct Corpus {
  std::string lang;
  std::string source;  // optional corpus/@source
  std::vector<Document> documents;

  std::size_t sentence_count() const;
  std::size_t instance_count() const;
  // Instance tokens in document order.
  std::vector<const Token*> instances() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// instance id -> ordered, non-empty list of sense ids.
using GoldKeys = std::map<std::string, std::vector<std::string>>;

// Throws SchemaError naming the offending id when a corpus invariant is
// broken: duplicate document/sentence/instance ids, an instance id that is not
// prefixed by its sentence id, empty surfaces, or ids on word forms.
void check_corpus(const Corpus& corpus);

// Parses the evaluation XML:
//   <corpus lang=".."> <text id=".."> <sentence id=".."> <wf>/<instance>
// Throws XmlParseError (with line/column) on malformed XML and SchemaError on
// unknown elements or attributes, missing required attributes, or broken
// invariants.
Corpus parse_corpus_xml(std::string_view text);

// Canonical form: UTF-8 declaration, one element per line, two spaces per
// nesting level, attributes in (id, lemma, pos) order. Refuses to emit a
// corpus that fails check_corpus().
std::string emit_corpus_xml(const Corpus& corpus);

// One line per instance: "<instance_id> <sense_id>[ <sense_id>...]".
// Throws FormatError with the line number for short lines or repeated ids.
GoldKeys parse_gold(std::string_view text);
// Lines sorted by instance id, single spaces, trailing newline.
std::string emit_gold(const GoldKeys& keys);

// Escapes markup characters and quotes; tab, newline and carriage return
// become character references so attribute values survive normalization.
std::string xml_escape(std::string_view text);

enum class FindingKind { kMissingKey, kUnknownInstance, kInventoryMismatch };

struct Finding {
  FindingKind kind;
  std::string instance_id;
  std::string detail;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;
  bool clean() const { return findings.empty(); }
  std::size_t count(FindingKind kind) const;
};

// Cross-checks corpus instances against gold keys and, when an inventory is
// given, that every gold sense belongs to the instance's (lemma, pos) entry.
ValidationReport validate(const Corpus& corpus, const GoldKeys& keys,
                          const SenseInventory* inventory = nullptr);

std::string to_string(FindingKind kind);

}  // namespace wsd

#endif  // WSD_CORPUS_HPP_
