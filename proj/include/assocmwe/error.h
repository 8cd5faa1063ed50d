// Copyright 2026 The assocmwe Authors.
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

#ifndef ASSOCMWE_ERROR_H_
#define ASSOCMWE_ERROR_H_

#include <stdexcept>
#include <string>

namespace assocmwe {

// Base class for all data errors raised by the library. The CLI maps every
// Error to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Carries the 1-based line number when known (0 if not).
class ParseError : public Error {
 public:
  ParseError(const std::string &message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed input that violates a data invariant (duplicates, zero vectors).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two inputs disagree with each other.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A required distribution or entry is absent.
class MissingDataError : public Error {
 public:
  MissingDataError(const std::string &message, std::string key)
      : Error(message), key_(std::move(key)) {}

  const std::string &key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace assocmwe

#endif  // ASSOCMWE_ERROR_H_
