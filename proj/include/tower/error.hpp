// Copyright 2026 The Tower Interpolation Authors.
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
#include <string_view>

namespace tower {

enum class ErrorCode {
  kZeroInversion,
  kMixedContexts,
  kDimensionMismatch,
  kZeroPolynomial,
  kNotAGroebnerBasis,
  kWrongDimension,
  kInternalDisagreement,
  kPreconditionUnmet,
  kTargetTooLarge,
  kNotTower,
  kNotCollinear,
  kDuplicateNodes,
  kEmptySite,
  kLengthMismatch,
  kParseError,
  kNonPrimeField,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroInversion: return "ZeroInversion";
    case ErrorCode::kMixedContexts: return "MixedContexts";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kNotAGroebnerBasis: return "NotAGroebnerBasis";
    case ErrorCode::kWrongDimension: return "WrongDimension";
    case ErrorCode::kInternalDisagreement: return "InternalDisagreement";
    case ErrorCode::kPreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::kTargetTooLarge: return "TargetTooLarge";
    case ErrorCode::kNotTower: return "NotTower";
    case ErrorCode::kNotCollinear: return "NotCollinear";
    case ErrorCode::kDuplicateNodes: return "DuplicateNodes";
    case ErrorCode::kEmptySite: return "EmptySite";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNonPrimeField: return "NonPrimeField";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above; the
// message is prefixed with the code name so CLI output stays greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tower
