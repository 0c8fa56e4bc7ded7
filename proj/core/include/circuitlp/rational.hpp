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

#ifndef CIRCUITLP_RATIONAL_HPP_
#define CIRCUITLP_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace circuitlp {

// mpq_class keeps every arithmetic result in lowest terms with a positive
// denominator; values built from raw numerator/denominator pairs must go
// through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q"; returns nullopt on malformed input or q = 0.
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_decimal(const Rational& q, int digits = 6);

// Combined bit length of numerator and denominator.
std::size_t bit_size(const Rational& q);

// Smallest k >= 0 with 2^k >= x (x <= 1 gives 0).
long ceil_log2(const Rational& x);

// floor(log2 x) for x >= 1; 0 below.
long floor_log2(const Rational& x);

// Smallest integer r with r*r >= n.
long ceil_sqrt(long n);

Rational abs(const Rational& q);

// A nonnegative weight or bound that may be +infinity (weights in the
// ratio oracle, upper capacities).
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT
  ExtendedRational(long value) : value_(value) {}                // NOLINT

  static ExtendedRational infinity() {
    ExtendedRational e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  const Rational& value() const { return value_; }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

std::string to_string(const ExtendedRational& e);

}  // namespace circuitlp

#endif  // CIRCUITLP_RATIONAL_HPP_
