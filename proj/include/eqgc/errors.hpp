// Copyright 2026 The EQGC Authors
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

namespace eqgc {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Input violates an operation's precondition or a type invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message) : Error(message) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& message) : Error(message) {}
};

// Dense construction would exceed the desk-scale limits (e.g. s^n > 4096).
class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& message) : Error(message) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& message) : Error(message) {}
};

class NotEquivariantError : public Error {
 public:
  explicit NotEquivariantError(const std::string& message) : Error(message) {}
};

}  // namespace eqgc
