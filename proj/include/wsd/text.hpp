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

#ifndef WSD_TEXT_HPP_
#define WSD_TEXT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wsd {

// Lowercase + Unicode NFC. Diacritics are kept, so "té" and "te" stay apart.
std::string normalize_lemma(std::string_view text);

// True when the headword spans more than one word (whitespace or '_').
bool is_multiword(std::string_view lemma);

bool contains_space(std::string_view text);

// Splits UTF-8 text into maximal runs of code points that are neither
// whitespace nor punctuation.
std::vector<std::string> split_words(std::string_view text);

// 64-bit FNV-1a. Stable across platforms; used to derive per-instance seeds.
std::uint64_t fnv1a64(std::string_view data);

// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view data);

std::vector<std::string> split_fields(std::string_view line);

std::string_view trim(std::string_view s);

}  // namespace wsd

#endif  // WSD_TEXT_HPP_
