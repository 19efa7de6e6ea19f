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

#include "wsd/inventory.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

#include "wsd/error.hpp"
#include "wsd/text.hpp"

namespace wsd {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad_field(std::size_t line, const std::string& field,
                            const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": field '" + field +
                    "': " + what);
}

const json& require(const json& object, const char* key, std::size_t line,
                    const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) bad_field(line, path + key, "missing");
  return *it;
}

std::string require_string(const json& object, const char* key,
                           std::size_t line, const std::string& path) {
  const json& value = require(object, key, line, path);
  if (!value.is_string()) bad_field(line, path + key, "expected string");
  return value.get<std::string>();
}

}  // namespace

bool LexicalEntry::multiword() const { return is_multiword(lemma); }

std::optional<std::size_t> LexicalEntry::position_of(
    std::string_view sense_id) const {
  for (std::size_t i = 0; i < senses.size(); ++i) {
    if (senses[i].sense_id == sense_id) return i;
  }
  return std::nullopt;
}

const LexicalEntry* SenseInventory::lookup(std::string_view lemma,
                                           const PosTag& pos) const {
  auto it = entries_.find(EntryKey{normalize_lemma(lemma), pos});
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t SenseInventory::polysemy(std::string_view lemma,
                                     const PosTag& pos) const {
  const LexicalEntry* entry = lookup(lemma, pos);
  return entry == nullptr ? 0 : entry->senses.size();
}

std::size_t SenseInventory::lemma_polysemy(std::string_view lemma) const {
  const std::string key = normalize_lemma(lemma);
  std::size_t total = 0;
  for (auto it = entries_.lower_bound(EntryKey{key, PosTag()});
       it != entries_.end() && it->first.lemma == key; ++it) {
    total += it->second.senses.size();
  }
  return total;
}

std::vector<PosTag> SenseInventory::pos_of(std::string_view lemma) const {
  const std::string key = normalize_lemma(lemma);
  std::vector<PosTag> tags;
  for (auto it = entries_.lower_bound(EntryKey{key, PosTag()});
       it != entries_.end() && it->first.lemma == key; ++it) {
    tags.push_back(it->first.pos);
  }
  return tags;
}

std::optional<SenseLocation> SenseInventory::locate(
    std::string_view sense_id) const {
  auto it = reverse_.find(sense_id);
  if (it == reverse_.end()) return std::nullopt;
  return it->second;
}

const SenseEntry* SenseInventory::find_sense(std::string_view sense_id) const {
  auto it = reverse_.find(sense_id);
  if (it == reverse_.end()) return nullptr;
  const LexicalEntry& entry = entries_.at(it->second.key);
  return &entry.senses[it->second.order_index];
}

std::size_t SenseInventory::lemma_count() const {
  std::size_t count = 0;
  const std::string* previous = nullptr;
  for (const auto& [key, entry] : entries_) {
    if (previous == nullptr || *previous != key.lemma) ++count;
    previous = &key.lemma;
  }
  return count;
}

void SenseInventory::add(std::string_view lemma, const PosTag& pos,
                         std::vector<SenseEntry> senses) {
  if (!pos.is_open_class()) {
    throw DataError("pos '" + pos.str() + "' is not one of NOUN/VERB/ADJ/ADV");
  }
  if (senses.empty()) throw DataError("entry has no senses");
  EntryKey key{normalize_lemma(lemma), pos};
  if (key.lemma.empty()) throw DataError("empty lemma");

  std::set<std::string_view> fresh;
  for (const SenseEntry& sense : senses) {
    if (sense.sense_id.empty()) throw DataError("empty sense_id");
    if (reverse_.count(sense.sense_id) != 0 ||
        !fresh.insert(sense.sense_id).second) {
      throw DataError("duplicate sense_id " + sense.sense_id);
    }
  }

  auto [it, inserted] = entries_.try_emplace(key);
  LexicalEntry& entry = it->second;
  if (inserted) {
    entry.lemma = key.lemma;
    entry.pos = key.pos;
  }
  for (SenseEntry& sense : senses) {
    sense.order_index = entry.senses.size();
    reverse_.emplace(sense.sense_id, SenseLocation{key, sense.order_index});
    entry.senses.push_back(std::move(sense));
  }
}

SenseInventory load_dictionary(std::istream& in, std::string source_name) {
  SenseInventory inventory(std::move(source_name));
  std::map<std::string, std::size_t, std::less<>> seen_at;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;

    json record;
    try {
      record = json::parse(content);
    } catch (const json::parse_error& e) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": not a JSON object: " + e.what());
    }
    if (!record.is_object()) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": record must be a JSON object");
    }

    const std::string lemma = require_string(record, "lemma", line_no, "");
    if (trim(lemma).empty()) bad_field(line_no, "lemma", "empty");
    const std::string pos_text = require_string(record, "pos", line_no, "");
    const std::optional<PosTag> pos = PosTag::open_class(pos_text);
    if (!pos) bad_field(line_no, "pos", "unknown tag '" + pos_text + "'");

    const json& senses_json = require(record, "senses", line_no, "");
    if (!senses_json.is_array()) bad_field(line_no, "senses", "expected array");
    if (senses_json.empty()) bad_field(line_no, "senses", "empty");

    std::vector<SenseEntry> senses;
    for (std::size_t i = 0; i < senses_json.size(); ++i) {
      const json& item = senses_json[i];
      const std::string path = "senses[" + std::to_string(i) + "].";
      if (!item.is_object()) {
        bad_field(line_no, "senses[" + std::to_string(i) + "]",
                  "expected object");
      }
      SenseEntry sense;
      sense.sense_id = require_string(item, "sense_id", line_no, path);
      if (sense.sense_id.empty()) bad_field(line_no, path + "sense_id", "empty");
      sense.gloss = require_string(item, "gloss", line_no, path);
      if (auto ex = item.find("examples"); ex != item.end()) {
        if (!ex->is_array()) bad_field(line_no, path + "examples", "expected array");
        for (const json& example : *ex) {
          if (!example.is_string()) {
            bad_field(line_no, path + "examples", "expected array of strings");
          }
          sense.usage_examples.push_back(example.get<std::string>());
        }
      }
      if (auto [it, fresh] = seen_at.try_emplace(sense.sense_id, line_no);
          !fresh) {
        throw DataError("duplicate sense_id " + sense.sense_id + " on line " +
                        std::to_string(line_no) + " (first defined on line " +
                        std::to_string(it->second) + ")");
      }
      senses.push_back(std::move(sense));
    }
    inventory.add(lemma, *pos, std::move(senses));
  }
  return inventory;
}

SenseInventory load_dictionary_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open dictionary " + path);
  return load_dictionary(in, path);
}

void write_dictionary(std::ostream& out, const SenseInventory& inventory) {
  for (const auto& [key, entry] : inventory.entries()) {
    ordered_json record;
    record["lemma"] = entry.lemma;
    record["pos"] = entry.pos.str();
    ordered_json senses = ordered_json::array();
    for (const SenseEntry& sense : entry.senses) {
      ordered_json item;
      item["sense_id"] = sense.sense_id;
      item["gloss"] = sense.gloss;
      item["examples"] = sense.usage_examples;
      senses.push_back(std::move(item));
    }
    record["senses"] = std::move(senses);
    out << record.dump() << '\n';
  }
}

}  // namespace wsd
