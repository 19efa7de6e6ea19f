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

#ifndef WSD_ERROR_HPP_
#define WSD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace wsd {

// Base for every error raised by the toolkit. User-input problems derive from
// InputError so the CLI can map them to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

// A line-oriented text file violated its format (dump, gold keys, predictions).
class FormatError : public InputError {
 public:
  using InputError::InputError;
};

// Well-formed XML that does not follow the corpus schema, or a corpus value
// that breaks its invariants.
class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

class XmlParseError : public InputError {
 public:
  XmlParseError(const std::string& message, long line, long column)
      : InputError(message), line_(line), column_(column) {}
  long line() const { return line_; }
  long column() const { return column_; }

 private:
  long line_;
  long column_;
};

// A precondition on the data (missing lemma, too few distractors, ...).
class DataError : public InputError {
 public:
  using InputError::InputError;
};

// A scorer broke its contract (wrong score count, unknown response id).
class EngineError : public Error {
 public:
  using Error::Error;
};

// A scorer declined to answer; disambiguate() turns this into an abstained
// prediction instead of failing the run.
class Abstention : public Error {
 public:
  using Error::Error;
};

}  // namespace wsd

#endif  // WSD_ERROR_HPP_
