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

#include "wsd/external.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cmath>
#include <cstring>
#include <thread>

#include <json.hpp>

#include "wsd/error.hpp"

namespace wsd {

using ordered_json = nlohmann::ordered_json;

std::string request_id(const ScoringRequest& request) {
  return std::string(request.id) + "#" + std::to_string(request.chunk_index);
}

std::string encode_score_request(const ScoringRequest& request) {
  ordered_json message;
  message["type"] = "score";
  message["id"] = request_id(request);
  ordered_json context = ordered_json::array();
  for (const ContextToken& token : request.context) context.push_back(token.surface);
  message["context"] = std::move(context);
  message["target"] = request.target_index;
  message["lemma"] = request.lemma;
  message["pos"] = request.pos.str();
  ordered_json candidates = ordered_json::array();
  for (const Candidate& candidate : request.candidates) {
    candidates.push_back(
        {{"sense_id", candidate.sense_id}, {"gloss", candidate.gloss}});
  }
  message["candidates"] = std::move(candidates);
  return message.dump();
}

std::string encode_bye() { return R"({"type":"bye"})"; }

ScoreResponse decode_score_response(std::string_view line) {
  ordered_json message;
  try {
    message = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error&) {
    throw EngineError("malformed scorer message: " + std::string(line));
  }
  if (!message.is_object()) {
    throw EngineError("scorer message is not an object: " + std::string(line));
  }
  const auto type = message.find("type");
  const auto id = message.find("id");
  if (type == message.end() || !type->is_string()) {
    throw EngineError("scorer message without type: " + std::string(line));
  }
  if (id == message.end() || !id->is_string()) {
    throw EngineError("scorer message without id: " + std::string(line));
  }
  ScoreResponse response;
  response.id = id->get<std::string>();
  if (*type == "scores") {
    const auto scores = message.find("scores");
    if (scores == message.end() || !scores->is_array()) {
      throw EngineError("response " + response.id + " has no scores array");
    }
    for (const auto& value : *scores) {
      if (!value.is_number()) {
        throw EngineError("response " + response.id + " has a non-numeric score");
      }
      response.scores.push_back(value.get<double>());
    }
  } else if (*type == "error") {
    response.kind = ScoreResponse::Kind::kError;
    const auto text = message.find("message");
    response.message =
        text != message.end() && text->is_string() ? text->get<std::string>() : "";
  } else {
    throw EngineError("unexpected scorer message type " + type->dump());
  }
  return response;
}

ExternalScorerClient::ExternalScorerClient(ExternalScorerOptions options)
    : options_(std::move(options)) {
  if (options_.command.empty()) throw InputError("empty scorer command");
  int fds[2];
  if (socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
    throw Error(std::string("socketpair: ") + std::strerror(errno));
  }
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    throw Error(std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    dup2(fds[1], STDIN_FILENO);
    dup2(fds[1], STDOUT_FILENO);
    execl("/bin/sh", "sh", "-c", options_.command.c_str(),
          static_cast<char*>(nullptr));
    _exit(127);
  }
  close(fds[1]);
  fd_ = fds[0];
  pid_ = pid;

  std::string line;
  try {
    if (!read_line(line, std::chrono::steady_clock::now() + options_.timeout)) {
      throw EngineError("scorer did not say hello within the timeout");
    }
    try {
      const ordered_json hello = ordered_json::parse(line);
      if (!hello.is_object() || hello.value("type", "") != "hello") {
        throw EngineError("expected hello, got: " + line);
      }
      if (hello.value("protocol", 0) != kProtocolVersion) {
        throw EngineError("unsupported scorer protocol in: " + line);
      }
      scorer_name_ = hello.value("name", "unnamed");
    } catch (const nlohmann::json::exception&) {
      throw EngineError("malformed handshake: " + line);
    }
  } catch (...) {
    shutdown();
    throw;
  }
}

ExternalScorerClient::~ExternalScorerClient() { shutdown(); }

void ExternalScorerClient::shutdown() {
  if (fd_ >= 0) {
    const std::string bye = encode_bye() + "\n";
    (void)send(fd_, bye.data(), bye.size(), MSG_NOSIGNAL);
    ::shutdown(fd_, SHUT_WR);
    // Drain until the scorer closes its side or a short grace period ends.
    const auto deadline =
        std::chrono::steady_clock::now() + std::chrono::milliseconds(2000);
    char scratch[4096];
    while (std::chrono::steady_clock::now() < deadline) {
      pollfd p{fd_, POLLIN, 0};
      if (poll(&p, 1, 50) <= 0) continue;
      if (recv(fd_, scratch, sizeof scratch, 0) <= 0) break;
    }
    close(fd_);
    fd_ = -1;
  }
  if (pid_ > 0) {
    int status = 0;
    for (int i = 0; i < 40; ++i) {
      if (waitpid(pid_, &status, WNOHANG) == pid_) {
        pid_ = -1;
        return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(25));
    }
    kill(pid_, SIGKILL);
    waitpid(pid_, &status, 0);
    pid_ = -1;
  }
}

void ExternalScorerClient::send_line(const std::string& line) {
  std::string payload = line + "\n";
  std::size_t sent = 0;
  while (sent < payload.size()) {
    const ssize_t n =
        send(fd_, payload.data() + sent, payload.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw EngineError(std::string("cannot write to scorer: ") +
                        std::strerror(errno));
    }
    sent += static_cast<std::size_t>(n);
  }
}

bool ExternalScorerClient::read_line(
    std::string& line, std::chrono::steady_clock::time_point deadline) {
  for (;;) {
    const std::size_t newline = buffer_.find('\n');
    if (newline != std::string::npos) {
      line = buffer_.substr(0, newline);
      buffer_.erase(0, newline + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return true;
    }
    const auto now = std::chrono::steady_clock::now();
    if (now >= deadline) return false;
    const auto wait =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now);
    pollfd p{fd_, POLLIN, 0};
    const int ready = poll(&p, 1, static_cast<int>(wait.count()) + 1);
    if (ready < 0) {
      if (errno == EINTR) continue;
      throw EngineError(std::string("poll: ") + std::strerror(errno));
    }
    if (ready == 0) continue;
    char chunk[4096];
    const ssize_t n = recv(fd_, chunk, sizeof chunk, 0);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw EngineError(std::string("cannot read from scorer: ") +
                        std::strerror(errno));
    }
    if (n == 0) throw EngineError("scorer process closed its output");
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

std::vector<double> ExternalScorerClient::score_chunk(
    const ScoringRequest& request) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (fd_ < 0) throw EngineError("scorer is not running");
  const std::string id = request_id(request);
  send_line(encode_score_request(request));

  const auto deadline = std::chrono::steady_clock::now() + options_.timeout;
  std::string line;
  for (;;) {
    if (!read_line(line, deadline)) {
      stale_ids_.insert(id);
      throw Abstention("scorer timed out on " + id);
    }
    if (line.empty()) continue;
    const ScoreResponse response = decode_score_response(line);
    // Replies come in request order, so a stale id seen here belongs to an
    // earlier timed-out request even when it equals the pending one.
    if (const auto stale = stale_ids_.find(response.id); stale != stale_ids_.end()) {
      stale_ids_.erase(stale);
      continue;
    }
    if (response.id != id) {
      throw EngineError("scorer answered id " + response.id + " while " + id +
                        " was pending");
    }
    if (response.kind == ScoreResponse::Kind::kError) {
      throw Abstention("scorer error on " + id + ": " + response.message);
    }
    if (response.scores.size() != request.candidates.size()) {
      throw EngineError("scorer returned " + std::to_string(response.scores.size()) +
                        " scores for " + std::to_string(request.candidates.size()) +
                        " candidates of " + id);
    }
    for (double score : response.scores) {
      if (!std::isfinite(score)) {
        throw EngineError("scorer returned a non-finite score for " + id);
      }
    }
    return response.scores;
  }
}

}  // namespace wsd
