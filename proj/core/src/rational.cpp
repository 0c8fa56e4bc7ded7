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

#include "circuitlp/rational.hpp"

#include <cctype>
#include <sstream>

#include "circuitlp/error.hpp"
#include "circuitlp/index_set.hpp"

namespace circuitlp {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSingularBasis: return "SingularBasis";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotInKernel: return "NotInKernel";
    case ErrorCode::kEstimateCeiling: return "EstimateCeiling";
    case ErrorCode::kUnboundedRatioLP: return "UnboundedRatioLP";
    case ErrorCode::kZeroDirection: return "ZeroDirection";
    case ErrorCode::kInfeasibleStart: return "InfeasibleStart";
    case ErrorCode::kIterationCap: return "IterationCap";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kNoLinearSolution: return "NoLinearSolution";
    case ErrorCode::kEmptyN: return "EmptyN";
    case ErrorCode::kAssertionFailed: return "AssertionFailed";
    case ErrorCode::kLinealitySpace: return "LinealitySpace";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kRankDeficient: return "RankDeficient";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(text)) return std::nullopt;
    return Rational(to_integer(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
  Integer d = to_integer(den);
  if (d == 0) return std::nullopt;
  return make_rational(to_integer(num), d);
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = abs(q) * scale;
  Integer rounded = (scaled.get_num() * 2 + scaled.get_den()) /
                    (2 * scaled.get_den());
  Integer whole = rounded / scale;
  Integer frac = rounded % scale;
  std::string f = frac.get_str();
  f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
  std::string out = (q < 0 && rounded != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) out += "." + f;
  return out;
}

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) +
         mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

long ceil_log2(const Rational& x) {
  if (x <= 1) return 0;
  // ceil(log2 x) = ceil(log2 ceil(x)); for an integer N > 1 that is the bit
  // length of N - 1.
  Integer c = x.get_num() / x.get_den();
  if (c * x.get_den() != x.get_num()) c += 1;
  Integer nm1 = c - 1;
  return static_cast<long>(mpz_sizeinbase(nm1.get_mpz_t(), 2));
}

long floor_log2(const Rational& x) {
  if (x < 1) return 0;
  // floor(log2 x) = floor(log2 floor(x)).
  Integer f = x.get_num() / x.get_den();
  return static_cast<long>(mpz_sizeinbase(f.get_mpz_t(), 2)) - 1;
}

long ceil_sqrt(long n) {
  if (n <= 0) return 0;
  Integer r;
  Integer nn(n);
  mpz_sqrt(r.get_mpz_t(), nn.get_mpz_t());
  long root = r.get_si();
  if (root * root < n) ++root;
  return root;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

std::string to_string(const ExtendedRational& e) {
  return e.is_infinite() ? std::string("inf") : to_string(e.value());
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < items_.size(); ++k) {
    if (k) os << ',';
    os << items_[k];
  }
  os << '}';
  return os.str();
}

}  // namespace circuitlp
