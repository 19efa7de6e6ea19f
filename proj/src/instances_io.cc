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

#include "wsd/instances_io.hpp"

#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

#include "wsd/error.hpp"
#include "wsd/text.hpp"

namespace wsd {

using ordered_json = nlohmann::ordered_json;

std::string encode_instance(const ClassificationInstance& instance) {
  ordered_json record;
  record["id"] = instance.instance_id;
  record["lemma"] = instance.lemma;
  record["pos"] = instance.pos.str();
  record["target"] = instance.target_index;
  ordered_json context = ordered_json::array();
  for (const ContextToken& token : instance.context) {
    context.push_back(
        {{"surface", token.surface}, {"lemma", token.lemma}, {"pos", token.pos.str()}});
  }
  record["context"] = std::move(context);
  ordered_json candidates = ordered_json::array();
  for (const Candidate& candidate : instance.candidates) {
    candidates.push_back(
        {{"sense_id", candidate.sense_id}, {"gloss", candidate.gloss}});
  }
  record["candidates"] = std::move(candidates);
  record["label"] = instance.label;
  return record.dump();
}

void check_instance(const ClassificationInstance& instance) {
  if (instance.instance_id.empty()) throw FormatError("instance with empty id");
  if (instance.target_index >= instance.context.size()) {
    throw FormatError(instance.instance_id + ": target index out of range");
  }
  if (instance.label >= instance.candidates.size()) {
    throw FormatError(instance.instance_id + ": label out of range");
  }
  std::set<std::string_view> ids;
  for (const Candidate& candidate : instance.candidates) {
    if (!ids.insert(candidate.sense_id).second) {
      throw FormatError(instance.instance_id + ": duplicate candidate " +
                        candidate.sense_id);
    }
  }
}

ClassificationInstance decode_instance(std::string_view line) {
  ClassificationInstance instance;
  try {
    const ordered_json record = ordered_json::parse(line);
    instance.instance_id = record.at("id").get<std::string>();
    instance.lemma = record.at("lemma").get<std::string>();
    instance.pos = PosTag(record.at("pos").get<std::string>());
    instance.target_index = record.at("target").get<std::size_t>();
    for (const auto& token : record.at("context")) {
      instance.context.push_back({token.at("surface").get<std::string>(),
                                  token.at("lemma").get<std::string>(),
                                  PosTag(token.at("pos").get<std::string>())});
    }
    for (const auto& candidate : record.at("candidates")) {
      instance.candidates.push_back({candidate.at("sense_id").get<std::string>(),
                                     candidate.at("gloss").get<std::string>()});
    }
    instance.label = record.at("label").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  }
  check_instance(instance);
  return instance;
}

void write_instances(std::ostream& out,
                     const std::vector<ClassificationInstance>& instances) {
  for (const ClassificationInstance& instance : instances) {
    out << encode_instance(instance) << '\n';
  }
}

std::vector<ClassificationInstance> read_instances(std::istream& in) {
  std::vector<ClassificationInstance> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      out.push_back(decode_instance(line));
    } catch (const FormatError& e) {
      throw FormatError("instances line " + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  return out;
}

}  // namespace wsd
