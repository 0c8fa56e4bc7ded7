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

#ifndef CIRCUITLP_KAPPA_DOUBLING_HPP_
#define CIRCUITLP_KAPPA_DOUBLING_HPP_

#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "circuitlp/error.hpp"
#include "circuitlp/rational.hpp"

namespace circuitlp {

struct DoublingOptions {
  int max_doublings = 30;
  // Give up once the estimate needs more than this many bits (2^(2^20)).
  std::size_t max_bits = std::size_t{1} << 20;
};

template <class T>
struct DoublingResult {
  T value;
  Rational kappa_hat;
  std::vector<Rational> tried;  // every estimate run, in order
};

// Runs `runner(kappa_hat)` starting at kappa_hat = start (the column count n)
// and squares the estimate after each failure (nullopt). A failure must only
// happen when the estimate is below the true circuit imbalance; running out
// of doublings therefore signals a bug in the runner and throws
// kEstimateCeiling.
template <class Runner>
auto kappa_doubling_run(const Rational& start, Runner&& runner,
                        const DoublingOptions& options = {})
    -> DoublingResult<typename std::invoke_result_t<Runner&, const Rational&>::value_type> {
  using Value =
      typename std::invoke_result_t<Runner&, const Rational&>::value_type;
  std::vector<Rational> tried;
  Rational kappa_hat = start < 1 ? Rational(1) : start;
  for (int doublings = 0;; ++doublings) {
    tried.push_back(kappa_hat);
    std::optional<Value> out = runner(static_cast<const Rational&>(kappa_hat));
    if (out) {
      return DoublingResult<Value>{std::move(*out), kappa_hat, std::move(tried)};
    }
    if (doublings >= options.max_doublings) break;
    Rational next = kappa_hat * kappa_hat;
    if (bit_size(next) > options.max_bits) break;
    kappa_hat = std::move(next);
  }
  throw Error(ErrorCode::kEstimateCeiling,
              "kappa estimate exhausted after " + std::to_string(tried.size()) +
                  " runs");
}

}  // namespace circuitlp

#endif  // CIRCUITLP_KAPPA_DOUBLING_HPP_
