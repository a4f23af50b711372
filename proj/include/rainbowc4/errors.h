// Copyright 2026 The rainbowc4 Authors
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

#ifndef RAINBOWC4_ERRORS_H_
#define RAINBOWC4_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rainbowc4 {

// Caller passed a value outside an operation's domain (bad vertex id, bad
// partition, unsupported size).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed `.ecg` / `.dcg` text. `line()` is 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A checker's structural precondition does not hold (e.g. a triangle-free
// theorem applied to a graph with a triangle).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// Well-formed request for something this library deliberately does not
// construct, such as projective planes over non-prime fields.
class UnsupportedError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace rainbowc4

#endif  // RAINBOWC4_ERRORS_H_
