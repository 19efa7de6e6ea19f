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

#ifndef WSD_INSTANCES_IO_HPP_
#define WSD_INSTANCES_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "wsd/builder.hpp"

namespace wsd {

// Classification instance file: one JSON object per line, keys in this order
//   {"id":..,"lemma":..,"pos":..,"target":N,
//    "context":[{"surface":..,"lemma":..,"pos":..},..],
//    "candidates":[{"sense_id":..,"gloss":..},..],"label":N}
std::string encode_instance(const ClassificationInstance& instance);
ClassificationInstance decode_instance(std::string_view line);

void write_instances(std::ostream& out,
                     const std::vector<ClassificationInstance>& instances);
// Throws FormatError naming the line for malformed records or records that
// break the instance invariants (target/label range, duplicate candidates).
std::vector<ClassificationInstance> read_instances(std::istream& in);

void check_instance(const ClassificationInstance& instance);

}  // namespace wsd

#endif  // WSD_INSTANCES_IO_HPP_
