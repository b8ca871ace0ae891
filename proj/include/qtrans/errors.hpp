// Copyright 2026 The Authors.
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

#ifndef QTRANS_ERRORS_HPP_
#define QTRANS_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtrans {

enum class ErrorCode {
  kNonPrimeCharacteristic,
  kReducibleModulus,
  kSpecMismatch,
  kDivisionByZero,
  kDimensionMismatch,
  kInfeasibleScale,
  kOutOfRange,
  kIncompleteTable,
  kNotSubmodular,
  kWrongNullity,
  kGroundMismatch,
  kExtensionTooLarge,
  kMalformedInput,
  kInvariantViolation,
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kSpecMismatch: return "SpecMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInfeasibleScale: return "InfeasibleScale";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kIncompleteTable: return "IncompleteTable";
    case ErrorCode::kNotSubmodular: return "NotSubmodular";
    case ErrorCode::kWrongNullity: return "WrongNullity";
    case ErrorCode::kGroundMismatch: return "GroundMismatch";
    case ErrorCode::kExtensionTooLarge: return "ExtensionTooLarge";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

// All library failures are reported through this one exception type; the
// code is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qtrans

#endif  // QTRANS_ERRORS_HPP_
