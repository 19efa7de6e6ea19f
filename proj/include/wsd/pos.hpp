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

#ifndef WSD_POS_HPP_
#define WSD_POS_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace wsd {

// Part-of-speech tag. Inventory entries are restricted to the four open
// classes; corpus tokens carry any tag verbatim (ADP, DET, X, ...).
class PosTag {
 public:
  PosTag() = default;
  explicit PosTag(std::string tag) : tag_(std::move(tag)) {}

  static PosTag noun() { return PosTag("NOUN"); }
  static PosTag verb() { return PosTag("VERB"); }
  static PosTag adj() { return PosTag("ADJ"); }
  static PosTag adv() { return PosTag("ADV"); }
  // Tag given to tokens nothing is known about.
  static PosTag other() { return PosTag("X"); }

  // Accepts NOUN/VERB/ADJ/ADV (case-insensitive); nullopt for anything else.
  static std::optional<PosTag> open_class(std::string_view tag);

  bool is_open_class() const;
  bool empty() const { return tag_.empty(); }
  const std::string& str() const { return tag_; }

  friend auto operator<=>(const PosTag&, const PosTag&) = default;

 private:
  std::string tag_;
};

}  // namespace wsd

#endif  // WSD_POS_HPP_
