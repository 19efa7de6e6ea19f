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

#ifndef WSD_MANIFEST_HPP_
#define WSD_MANIFEST_HPP_

#include <string>
#include <utility>
#include <vector>

namespace wsd {

// Written next to every output artifact. Contains nothing time- or
// host-dependent, so identical runs produce identical manifests.
struct RunManifest {
  struct Input {
    std::string role;
    std::string path;
    std::string sha256;
  };

  std::string command;
  std::vector<Input> inputs;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::pair<std::string, std::string>> outputs;  // role, path

  void add_input(std::string role, const std::string& path);
  void set(std::string key, std::string value);

  std::string render() const;
};

inline constexpr const char* kToolVersion = WSD_VERSION;
inline constexpr int kCorpusFormatVersion = 1;
inline constexpr int kGoldFormatVersion = 1;
inline constexpr int kInstanceFormatVersion = 1;
inline constexpr int kPredictionFormatVersion = 1;
inline constexpr int kDictionaryFormatVersion = 1;

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace wsd

#endif  // WSD_MANIFEST_HPP_
