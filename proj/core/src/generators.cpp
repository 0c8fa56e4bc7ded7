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

#include "circuitlp/generators.hpp"

#include <algorithm>

#include "circuitlp/error.hpp"
#include "circuitlp/linalg.hpp"
#include "circuitlp/simplex.hpp"

namespace circuitlp {

namespace {

constexpr int kRetryCap = 200;

long draw(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Vector random_vector(Rng& rng, std::size_t n, long lo, long hi) {
  Vector v(n);
  for (auto& x : v) x = draw(rng, lo, hi);
  return v;
}

Vector positive_cost(Rng& rng, std::size_t n) { return random_vector(rng, n, 1, 9); }

void require_shape(std::size_t n, std::size_t m) {
  if (m < 1 || n <= m) {
    throw Error(ErrorCode::kInvalidArgument, "generators need n > m >= 1");
  }
}

// Grows the strictly-between set B to a basis with columns from L ∪ H.
Partition partition_of(const Matrix& a, const Vector& x, const Bounds& u) {
  std::vector<Index> basis, lower, upper;
  for (Index i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) {
      lower.push_back(i);
    } else if (u[i].is_finite() && x[i] == u[i].value()) {
      upper.push_back(i);
    } else {
      basis.push_back(i);
    }
  }
  IndexSet b(basis);
  std::size_t r = rank(a, b);
  for (Index i = 0; i < x.size() && b.size() < a.rows(); ++i) {
    if (b.contains(i)) continue;
    IndexSet grown = b.unite(IndexSet{i});
    const std::size_t rg = rank(a, grown);
    if (rg > r) {
      b = grown;
      r = rg;
    }
  }
  return {b, IndexSet(lower).minus(b), IndexSet(upper).minus(b)};
}

GeneratedInstance uncapacitated(InstanceKind kind, std::size_t n,
                                std::size_t m, Rng& rng) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Matrix a = kind == InstanceKind::kTotallyUnimodular
                   ? random_incidence_matrix(rng, m, n)
                   : random_matrix(rng, m, n, 5);
    if (rank(a) != m) continue;
    Vector xhat = random_vector(rng, n, 0, 4);
    if (is_zero(xhat)) continue;
    Vector b = a * xhat;
    std::vector<SimplexOutcome> vertices;
    for (int k = 0; k < 20 && vertices.size() < 2; ++k) {
      SimplexOutcome out = simplex_solve(a, b, positive_cost(rng, n));
      if (out.status != LpStatus::kOptimal) break;
      if (vertices.empty() || *vertices.front().x != *out.x) {
        vertices.push_back(std::move(out));
      }
    }
    if (vertices.size() < 2) continue;
    GeneratedInstance g;
    g.instance = LpInstance{a, b, random_vector(rng, n, -5, 5), std::nullopt};
    g.start = *vertices[0].x;
    g.target_basis = *vertices[1].basis;
    g.target = *vertices[1].x;
    return g;
  }
  throw Error(ErrorCode::kGenerationFailed, "no instance with two vertices");
}

GeneratedInstance capacitated(std::size_t n, std::size_t m, Rng& rng) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Matrix a = random_matrix(rng, m, n, 5);
    if (rank(a) != m) continue;
    Bounds u(n);
    Vector xhat(n);
    for (std::size_t i = 0; i < n; ++i) {
      const long ui = draw(rng, 1, 4);
      u[i] = ExtendedRational(Rational(ui));
      xhat[i] = make_rational(ui, 2);
    }
    Vector b = a * xhat;
    std::vector<Vector> vertices;
    for (int k = 0; k < 20 && vertices.size() < 2; ++k) {
      Vector c = random_vector(rng, n, -9, 9);
      SimplexOutcome out = simplex_solve(LpInstance{a, b, c, u});
      if (out.status != LpStatus::kOptimal) break;
      if (vertices.empty() || vertices.front() != *out.x) {
        vertices.push_back(*out.x);
      }
    }
    if (vertices.size() < 2) continue;
    GeneratedInstance g;
    g.instance = LpInstance{a, b, random_vector(rng, n, -5, 5), u};
    g.start = vertices[0];
    g.target = vertices[1];
    g.partition = partition_of(a, g.target, u);
    g.target_basis = g.partition->basis;
    return g;
  }
  throw Error(ErrorCode::kGenerationFailed, "no capacitated instance");
}

}  // namespace

const char* to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kGeneric: return "generic";
    case InstanceKind::kTotallyUnimodular: return "tu";
    case InstanceKind::kCapacitated: return "cap";
  }
  return "unknown";
}

std::optional<InstanceKind> parse_instance_kind(std::string_view text) {
  if (text == "generic") return InstanceKind::kGeneric;
  if (text == "tu") return InstanceKind::kTotallyUnimodular;
  if (text == "cap") return InstanceKind::kCapacitated;
  return std::nullopt;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  Matrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = draw(rng, -bound, bound);
  }
  return a;
}

Matrix random_incidence_matrix(Rng& rng, std::size_t m, std::size_t n) {
  if (n < m) throw Error(ErrorCode::kInvalidArgument, "need n >= m arcs");
  const long nodes = static_cast<long>(m) + 1;
  Matrix full(m + 1, n);
  auto arc = [&](std::size_t col, long from, long to) {
    if (draw(rng, 0, 1) == 1) std::swap(from, to);
    full(static_cast<std::size_t>(from), col) = 1;
    full(static_cast<std::size_t>(to), col) = -1;
  };
  for (std::size_t v = 1; v <= m; ++v) {
    arc(v - 1, draw(rng, 0, static_cast<long>(v) - 1), static_cast<long>(v));
  }
  for (std::size_t col = m; col < n; ++col) {
    const long from = draw(rng, 0, nodes - 1);
    long to = draw(rng, 0, nodes - 2);
    if (to >= from) ++to;
    arc(col, from, to);
  }
  std::vector<Index> keep(m);
  for (std::size_t i = 0; i < m; ++i) keep[i] = i;
  return full.select_rows(IndexSet(keep));
}

GeneratedInstance generate_instance(InstanceKind kind, std::size_t n,
                                    std::size_t m, std::uint64_t seed) {
  require_shape(n, m);
  Rng rng(seed);
  if (kind == InstanceKind::kCapacitated) return capacitated(n, m, rng);
  return uncapacitated(kind, n, m, rng);
}

SolvableLp generate_solvable_lp(std::size_t n, std::size_t m,
                                std::uint64_t seed) {
  require_shape(n, m);
  Rng rng(seed);
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Matrix a = random_matrix(rng, m, n, 5);
    if (rank(a) != m) continue;
    Vector start = random_vector(rng, n, 1, 4);
    Vector b = a * start;
    Vector c = random_vector(rng, n, -5, 5);
    if (simplex_solve(a, b, c).status != LpStatus::kOptimal) continue;
    return {LpInstance{a, b, c, std::nullopt}, start};
  }
  throw Error(ErrorCode::kGenerationFailed, "no bounded LP");
}

FeasibilityInstance generate_feasibility_instance(std::size_t n, std::size_t m,
                                                  bool feasible,
                                                  std::uint64_t seed) {
  const std::size_t k = std::max(n / 2, m + 1);
  Rng rng(seed);
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Matrix a = random_matrix(rng, m, k, 4);
    if (rank(a) != m) continue;
    Vector x;
    Vector b;
    if (feasible) {
      Vector xhat = random_vector(rng, k, 0, 3);
      b = a * xhat;
      // Push the start away from the nonnegative orthant along ker(A).
      Matrix ker = kernel_basis(a);
      x = xhat - Rational(draw(rng, 2, 4)) * ker.column(0);
    } else {
      b = random_vector(rng, m, -6, 6);
      x = *solve_any(a, b);
    }
    if (is_nonnegative(x)) continue;
    const bool has = simplex_solve(a, b, zeros(k)).status != LpStatus::kInfeasible;
    if (has != feasible) continue;
    FeasibilityInstance inst;
    inst.a = a.hcat(Matrix(m, k));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < k; ++j) inst.a(i, k + j) = -a(i, j);
    }
    inst.b = b;
    std::vector<Index> z(k);
    for (std::size_t j = 0; j < k; ++j) z[j] = k + j;
    inst.zero_set = IndexSet(z);
    inst.start = positive_part(x);
    Vector neg = negative_part(x);
    inst.start.insert(inst.start.end(), neg.begin(), neg.end());
    inst.feasible = feasible;
    return inst;
  }
  throw Error(ErrorCode::kGenerationFailed, "no feasibility instance");
}

GeneralFormSystem generate_general_form(std::size_t n, std::size_t ma,
                                        std::size_t mb, std::uint64_t seed) {
  if (ma + mb < n || ma >= n) {
    throw Error(ErrorCode::kInvalidArgument, "need ma < n <= ma + mb");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    GeneralFormSystem sys;
    sys.a = random_matrix(rng, ma, n, 3);
    sys.b_ineq = random_matrix(rng, mb, n, 3);
    if (rank(sys.a) != ma) continue;
    const Matrix stacked = ma > 0 ? sys.a.vcat(sys.b_ineq) : sys.b_ineq;
    if (rank(stacked) != n) continue;
    Vector xhat = random_vector(rng, n, -2, 2);
    sys.b = sys.a * xhat;
    sys.d = sys.b_ineq * xhat + random_vector(rng, mb, 0, 2);
    sys.c = random_vector(rng, n, -3, 3);
    return sys;
  }
  throw Error(ErrorCode::kGenerationFailed, "no pointed general-form system");
}

}  // namespace circuitlp
