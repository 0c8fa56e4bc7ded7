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

#include "circuitlp/params.hpp"

#include "circuitlp/error.hpp"

namespace circuitlp {

namespace {

Rational num(std::size_t v) { return Rational(static_cast<long>(v)); }

std::size_t ceil_to_size(const Rational& q) {
  Integer c = q.get_num() / q.get_den();
  if (c * q.get_den() != q.get_num() && sgn(q) > 0) c += 1;
  return static_cast<std::size_t>(c.get_ui());
}

}  // namespace

Rational ln_upper_bound(const Rational& x) {
  if (x <= 1) return 0;
  return make_rational(6932, 10000) * Rational(floor_log2(x) + 1);
}

SolverParams SolverParams::make(std::size_t m, std::size_t n,
                                const Rational& kappa_hat) {
  if (m < 1 || n < 1 || kappa_hat < 1) {
    throw Error(ErrorCode::kInvalidArgument, "solver parameters need m, n, kappa >= 1");
  }
  SolverParams p;
  p.m = m;
  p.n = n;
  p.kappa_hat = kappa_hat;
  const Rational cs = num(static_cast<std::size_t>(ceil_sqrt(static_cast<long>(n))));
  const Rational k2 = kappa_hat * kappa_hat;
  p.delta = 1 / (2 * num(n) * cs * num(m + 2) * kappa_hat);
  auto gamma_of = [&](std::size_t t) -> Rational {
    return 4 * num(m + 2) * cs * k2 * num(t) / p.delta;
  };
  auto step = [&](std::size_t t) -> std::size_t {
    const Rational arg = 2 * num(n) * num(n) * cs * cs * cs * k2 * gamma_of(t) / p.delta;
    return 1 + ceil_to_size(num(n) * ln_upper_bound(arg));
  };
  std::size_t t = 1;
  for (int guard = 0; guard < 64; ++guard) {
    const std::size_t next = step(t);
    if (next <= t) break;
    t = next;
  }
  p.phase_ratio_cap = t;
  p.gamma = gamma_of(t);
  return p;
}

std::size_t SolverParams::feasibility_ratio_cap() const {
  const long lg = ceil_log2(num(n) + kappa_hat);
  return cap_factor * m * n * static_cast<std::size_t>(lg + 1);
}

}  // namespace circuitlp
