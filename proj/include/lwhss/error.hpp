// Copyright 2026 The lwhss Authors
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

#ifndef LWHSS_ERROR_HPP_
#define LWHSS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lwhss {

enum class Errc {
  kDivisionByZero,
  kFieldMismatch,
  kFieldTooLarge,
  kInvalidField,
  kNotSquare,
  kLengthMismatch,
  kDimensionMismatch,
  kEnumerationTooLarge,
  kParamsExceedMdsBound,
  kNotMds,
  kNotTn,
  kNotBlockTn,
  kLabelweightTooSmall,
  kInvalidLabeling,
  kRankDeficient,
  kInfeasibleParams,
  kThresholdOutOfRange,
  kSystemInfeasible,
  kWrongServer,
  kMissingShares,
  kDegreeTooHigh,
  kTooLargeForExhaustive,
  kSearchTooLarge,
  kSchemeHashMismatch,
  kMalformedInput,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kFieldMismatch: return "FieldMismatch";
    case Errc::kFieldTooLarge: return "FieldTooLarge";
    case Errc::kInvalidField: return "InvalidField";
    case Errc::kNotSquare: return "NotSquare";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kEnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::kParamsExceedMdsBound: return "ParamsExceedMdsBound";
    case Errc::kNotMds: return "NotMds";
    case Errc::kNotTn: return "NotTn";
    case Errc::kNotBlockTn: return "NotBlockTn";
    case Errc::kLabelweightTooSmall: return "LabelweightTooSmall";
    case Errc::kInvalidLabeling: return "InvalidLabeling";
    case Errc::kRankDeficient: return "RankDeficient";
    case Errc::kInfeasibleParams: return "InfeasibleParams";
    case Errc::kThresholdOutOfRange: return "ThresholdOutOfRange";
    case Errc::kSystemInfeasible: return "SystemInfeasible";
    case Errc::kWrongServer: return "WrongServer";
    case Errc::kMissingShares: return "MissingShares";
    case Errc::kDegreeTooHigh: return "DegreeTooHigh";
    case Errc::kTooLargeForExhaustive: return "TooLargeForExhaustive";
    case Errc::kSearchTooLarge: return "SearchTooLarge";
    case Errc::kSchemeHashMismatch: return "SchemeHashMismatch";
    case Errc::kMalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

// what() is prefixed with the code name.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, Errc code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace lwhss

#endif  // LWHSS_ERROR_HPP_
