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

#ifndef WSD_INVENTORY_HPP_
#define WSD_INVENTORY_HPP_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsd/pos.hpp"

namespace wsd {

struct SenseEntry {
  std::string sense_id;
  std::string gloss;
  std::vector<std::string> usage_examples;
  std::size_t order_index = 0;

  friend bool operator==(const SenseEntry&, const SenseEntry&) = default;
};

struct EntryKey {
  std::string lemma;  // normalized
  PosTag pos;

  friend auto operator<=>(const EntryKey&, const EntryKey&) = default;
};

struct LexicalEntry {
  std::string lemma;
  PosTag pos;
  std::vector<SenseEntry> senses;  // dictionary listing order

  bool multiword() const;
  // Index of sense_id within senses, if present.
  std::optional<std::size_t> position_of(std::string_view sense_id) const;

  friend bool operator==(const LexicalEntry&, const LexicalEntry&) = default;
};

struct SenseLocation {
  EntryKey key;
  std::size_t order_index = 0;

  friend bool operator==(const SenseLocation&, const SenseLocation&) = default;
};

// (lemma, pos) -> ordered senses, plus a sense_id -> location reverse index.
// Built once by load_dictionary() and treated as immutable afterwards.
class SenseInventory {
 public:
  explicit SenseInventory(std::string source_name = {})
      : source_name_(std::move(source_name)) {}

  const std::string& source_name() const { return source_name_; }

  // Lemma lookup is case-insensitive (normalized); nullptr when absent.
  const LexicalEntry* lookup(std::string_view lemma, const PosTag& pos) const;

  // Number of listed senses, 0 when the entry does not exist.
  std::size_t polysemy(std::string_view lemma, const PosTag& pos) const;

  // Sum of polysemy over every part of speech listed for the lemma.
  std::size_t lemma_polysemy(std::string_view lemma) const;

  std::optional<SenseLocation> locate(std::string_view sense_id) const;
  const SenseEntry* find_sense(std::string_view sense_id) const;

  // Parts of speech under which the lemma is listed, in tag order.
  std::vector<PosTag> pos_of(std::string_view lemma) const;

  const std::map<EntryKey, LexicalEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t entry_count() const { return entries_.size(); }
  std::size_t lemma_count() const;
  std::size_t sense_count() const { return reverse_.size(); }

  // Appends senses to the (lemma, pos) entry, creating it when new. The
  // order_index of every added sense is assigned here. Throws DataError on an
  // empty sense list, a non open-class pos or a sense_id already present.
  void add(std::string_view lemma, const PosTag& pos,
           std::vector<SenseEntry> senses);

  friend bool operator==(const SenseInventory& a, const SenseInventory& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::string source_name_;
  std::map<EntryKey, LexicalEntry> entries_;
  std::map<std::string, SenseLocation, std::less<>> reverse_;
};

// Reads the dictionary dump: one JSON object per line,
//   {"lemma":"taza","pos":"NOUN","senses":[{"sense_id":"A183451",
//    "gloss":"...","examples":["..."]}, ...]}
// Blank lines and lines starting with '#' are ignored. Records sharing a
// (lemma, pos) are merged in stream order. Throws FormatError naming the line
// and field for malformed records, and DataError naming both lines for a
// repeated sense_id.
SenseInventory load_dictionary(std::istream& in, std::string source_name = {});
SenseInventory load_dictionary_file(const std::string& path);

// Writes one record per entry, in (lemma, pos) order.
void write_dictionary(std::ostream& out, const SenseInventory& inventory);

}  // namespace wsd

#endif  // WSD_INVENTORY_HPP_
