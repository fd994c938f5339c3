// Copyright 2026 The qcenter Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qcenter {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind {
  check = 1,     // an algebraic identity failed
  input = 2,     // malformed or inconsistent input
  bound = 3,     // a truncation bound is too small for the request
  internal = 4,  // an invariant that must hold by construction did not
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

class BoundError : public Error {
 public:
  BoundError(const std::string& what, int required)
      : Error(ErrorKind::bound, what + " (minimal sufficient bound: " + std::to_string(required) + ")"),
        required_(required) {}
  int required() const noexcept { return required_; }

 private:
  int required_;
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorKind::internal, what) {}
};

}  // namespace qcenter
