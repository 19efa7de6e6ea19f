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

#include "wsd/manifest.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "wsd/error.hpp"
#include "wsd/text.hpp"

namespace wsd {

void RunManifest::add_input(std::string role, const std::string& path) {
  inputs.push_back({std::move(role), path, sha256_hex(read_file(path))});
}

void RunManifest::set(std::string key, std::string value) {
  config.emplace_back(std::move(key), std::move(value));
}

std::string RunManifest::render() const {
  nlohmann::ordered_json j;
  j["tool"] = "wsdkit";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["formats"] = {{"dictionary", kDictionaryFormatVersion},
                  {"corpus_xml", kCorpusFormatVersion},
                  {"gold", kGoldFormatVersion},
                  {"instances", kInstanceFormatVersion},
                  {"predictions", kPredictionFormatVersion}};
  nlohmann::ordered_json in = nlohmann::ordered_json::array();
  for (const Input& input : inputs) {
    in.push_back({{"role", input.role}, {"path", input.path}, {"sha256", input.sha256}});
  }
  j["inputs"] = std::move(in);
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config) cfg[key] = value;
  j["config"] = std::move(cfg);
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [role, path] : outputs) out[role] = path;
  j["outputs"] = std::move(out);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed for " + path);
}

}  // namespace wsd
