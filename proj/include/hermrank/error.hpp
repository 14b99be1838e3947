// Copyright 2026 The hermrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hermrank {

enum class ErrorKind {
  DivisionByZero,
  DimensionMismatch,
  ZeroPolynomial,
  ZeroProduct,
  NotBihomogeneous,
  NotHermitian,
  RankDeficientParametrization,
  InvalidInput,
  TrivialSignature,
  HypothesisViolated,
  SyntaxError,
  UnknownVariable,
  SchemaError,
  SpecError,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure reported by the library. The kind is
/// stable and meant for dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the text parsers; carries the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t offset, const std::string& message)
      : Error(kind, message + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised by the JSON readers; carries a JSON pointer to the bad node.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& pointer, const std::string& message)
      : Error(ErrorKind::SchemaError, (pointer.empty() ? std::string("/") : pointer) + ": " + message),
        pointer_(pointer) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace hermrank
