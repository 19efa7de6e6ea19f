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

#ifndef WSD_EXTERNAL_HPP_
#define WSD_EXTERNAL_HPP_

#include <chrono>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wsd/engines.hpp"

namespace wsd {

// Wire protocol v1, one JSON message per line over the scorer's stdin/stdout:
//   scorer -> {"type":"hello","protocol":1,"name":..}
//   client -> {"type":"score","id":..,"context":[..],"target":N,"lemma":..,
//              "pos":..,"candidates":[{"sense_id":..,"gloss":..},..]}
//   scorer -> {"type":"scores","id":..,"scores":[..]}
//          or {"type":"error","id":..,"message":..}
//   both   -> {"type":"bye"}
inline constexpr int kProtocolVersion = 1;

// Request id for one chunk: "<instance id>#<chunk index>".
std::string request_id(const ScoringRequest& request);
std::string encode_score_request(const ScoringRequest& request);
std::string encode_bye();

struct ScoreResponse {
  enum class Kind { kScores, kError };
  Kind kind = Kind::kScores;
  std::string id;
  std::vector<double> scores;
  std::string message;
};

// Throws EngineError on malformed JSON, an unexpected type, or missing fields.
ScoreResponse decode_score_response(std::string_view line);

struct ExternalScorerOptions {
  std::string command;  // run through /bin/sh -c
  std::chrono::milliseconds timeout{30000};
};

// Runs a scorer process and talks wire protocol v1 to it. Requests are
// serialized; score_chunk may be called from several threads.
//   - protocol violations (bad JSON, id mismatch, wrong score count, process
//     exit) raise EngineError;
//   - an error response or a timeout raises Abstention. Late answers to
//     timed-out requests are discarded.
class ExternalScorerClient : public Scorer {
 public:
  explicit ExternalScorerClient(ExternalScorerOptions options);
  ~ExternalScorerClient() override;

  ExternalScorerClient(const ExternalScorerClient&) = delete;
  ExternalScorerClient& operator=(const ExternalScorerClient&) = delete;

  std::string name() const override { return "external:" + scorer_name_; }
  const std::string& scorer_name() const { return scorer_name_; }
  std::vector<double> score_chunk(const ScoringRequest& request) override;

 private:
  void send_line(const std::string& line);
  // Next line from the scorer; false on timeout. EngineError on EOF.
  bool read_line(std::string& line, std::chrono::steady_clock::time_point deadline);
  void shutdown();

  ExternalScorerOptions options_;
  int fd_ = -1;
  int pid_ = -1;
  std::string buffer_;
  std::string scorer_name_;
  std::multiset<std::string> stale_ids_;  // one per unanswered request
  std::mutex mutex_;
};

}  // namespace wsd

#endif  // WSD_EXTERNAL_HPP_
