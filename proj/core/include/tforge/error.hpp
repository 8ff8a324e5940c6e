/*
 * Copyright 2026 The tforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tforge {

enum class ErrorCode {
  kDivisionByZero,
  kPoleAtOrigin,
  kNotInvertible,
  kCompositionUndefined,
  kExpDomain,
  kLogDomain,
  kPowDomain,
  kRevertConstantTerm,
  kRevertLinearTerm,
  kSyntax,
  kUnknownIdentifier,
  kUnboundParameter,
  kNonConstantExponent,
  kInvalidSpec,
  kCatalogConstraint,
  kUnknownCatalogEntry,
  kKindMismatch,
  kOutOfRange,
  kIrregularShape,
  kInvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure in the library surfaces as a tforge::Error carrying a code,
// so callers can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t offset, const std::string& message)
      : Error(code, message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace tforge
