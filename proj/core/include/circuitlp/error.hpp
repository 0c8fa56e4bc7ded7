// Copyright 2026 The circuitlp Authors.
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

#ifndef CIRCUITLP_ERROR_HPP_
#define CIRCUITLP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace circuitlp {

enum class ErrorCode {
  kInvalidArgument,
  kSingularBasis,
  kZeroVector,
  kTooLarge,
  kNotInKernel,
  kEstimateCeiling,
  kUnboundedRatioLP,
  kZeroDirection,
  kInfeasibleStart,
  kIterationCap,
  kGenerationFailed,
  kNoLinearSolution,
  kEmptyN,
  kAssertionFailed,
  kLinealitySpace,
  kParseError,
  kDimensionMismatch,
  kRankDeficient,
};

std::string_view error_code_name(ErrorCode code);

// Every failure in the library is reported as an Error carrying a code, so
// callers can branch on the kind (e.g. the kappa-doubling wrapper treats
// kIterationCap, kEmptyN and kAssertionFailed as "estimate too small").
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline bool is_kappa_failure(ErrorCode code) {
  return code == ErrorCode::kIterationCap || code == ErrorCode::kEmptyN ||
         code == ErrorCode::kAssertionFailed;
}

}  // namespace circuitlp

#endif  // CIRCUITLP_ERROR_HPP_
