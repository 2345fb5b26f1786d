// Copyright (c) 2026, The minmax-curve Authors
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

namespace mmc {

enum class ErrorCode {
  kInvalidInput,
  kDegenerateInput,
  kIllPosedAngle,
  kNoAdmissibleCurve,
  kOutOfRange,
  kNotInF,
  kHypothesisViolated,
  kUndefinedAtS,
  kInternalError,
};

/// Stable identifier used in machine-readable error objects.
constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kIllPosedAngle: return "IllPosedAngle";
    case ErrorCode::kNoAdmissibleCurve: return "NoAdmissibleCurve";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNotInF: return "NotInF";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kUndefinedAtS: return "UndefinedAtS";
    case ErrorCode::kInternalError: return "InternalError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mmc
