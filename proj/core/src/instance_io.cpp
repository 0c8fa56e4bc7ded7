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

#include "circuitlp/instance_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "circuitlp/error.hpp"

namespace circuitlp {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

[[noreturn]] void fail(std::size_t line, std::size_t column,
                       const std::string& what) {
  throw Error(ErrorCode::kParseError, std::to_string(line) + ":" +
                                          std::to_string(column) + ": " + what);
}

std::vector<Token> split(std::string_view line, std::size_t offset,
                         bool commas) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto sep = [&](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || (commas && ch == ',');
  };
  while (i < line.size()) {
    while (i < line.size() && sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !sep(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), offset + start + 1});
  }
  return out;
}

std::size_t parse_count(const Token& t, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size()) {
    fail(line, t.column, "expected a count, got '" + std::string(t.text) + "'");
  }
  return v;
}

Rational parse_entry(const Token& t, std::size_t line) {
  auto q = parse_rational(t.text);
  if (!q) fail(line, t.column, "bad number '" + std::string(t.text) + "'");
  return *q;
}

Vector parse_entries(const std::vector<Token>& toks, std::size_t line) {
  Vector v;
  v.reserve(toks.size());
  for (const auto& t : toks) v.push_back(parse_entry(t, line));
  return v;
}

void expect_length(std::size_t got, std::size_t want, std::size_t line,
                   const char* what) {
  if (got != want) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(line) + ": " + what + " has " +
                    std::to_string(got) + " entries, expected " +
                    std::to_string(want));
  }
}

std::string join(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += to_string(v[i]);
  }
  return s;
}

void render_rows(std::ostringstream& os, const char* key, const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) os << key << ": " << join(a.row(i)) << '\n';
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
  std::optional<std::size_t> n, m, mb;
  bool capacitated = false, general = false, header_seen = false;
  std::vector<Vector> a_rows, b_rows;
  std::optional<Vector> b, c, d;
  std::optional<Bounds> u;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto toks = split(line, 0, false);
    if (toks.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      for (const auto& t : toks) {
        auto eq = t.text.find('=');
        if (eq == std::string_view::npos) {
          if (t.text == "capacitated") {
            capacitated = true;
          } else if (t.text == "general") {
            general = true;
          } else {
            fail(line_no, t.column, "unknown header flag '" + std::string(t.text) + "'");
          }
          continue;
        }
        const std::string_view key = t.text.substr(0, eq);
        const Token value{t.text.substr(eq + 1), t.column + eq + 1};
        if (key == "n") {
          n = parse_count(value, line_no);
        } else if (key == "m") {
          m = parse_count(value, line_no);
        } else if (key == "mb") {
          mb = parse_count(value, line_no);
        } else {
          fail(line_no, t.column, "unknown header key '" + std::string(key) + "'");
        }
      }
      if (!n || !m) fail(line_no, 1, "header needs n= and m=");
      if (general && !mb) fail(line_no, 1, "general form needs mb=");
      continue;
    }
    const std::string_view head = toks.front().text;
    if (head.size() < 2 || head.back() != ':') {
      fail(line_no, toks.front().column, "expected 'A:', 'b:', 'c:', 'u:', 'B:' or 'd:'");
    }
    const std::string_view key = head.substr(0, head.size() - 1);
    std::vector<Token> rest(toks.begin() + 1, toks.end());
    auto once = [&](auto& slot, auto value) {
      if (slot) fail(line_no, toks.front().column, "duplicate '" + std::string(head) + "'");
      slot = std::move(value);
    };
    if (key == "A") {
      a_rows.push_back(parse_entries(rest, line_no));
      expect_length(a_rows.back().size(), *n, line_no, "A row");
    } else if (key == "B" && general) {
      b_rows.push_back(parse_entries(rest, line_no));
      expect_length(b_rows.back().size(), *n, line_no, "B row");
    } else if (key == "b") {
      once(b, parse_entries(rest, line_no));
    } else if (key == "c") {
      once(c, parse_entries(rest, line_no));
    } else if (key == "d" && general) {
      once(d, parse_entries(rest, line_no));
    } else if (key == "u" && capacitated) {
      Bounds bounds;
      for (const auto& t : rest) {
        bounds.push_back(t.text == "inf" ? ExtendedRational::infinity()
                                         : ExtendedRational(parse_entry(t, line_no)));
      }
      once(u, std::move(bounds));
    } else {
      fail(line_no, toks.front().column, "unexpected '" + std::string(head) + "'");
    }
  }
  if (!header_seen) fail(1, 1, "empty instance");
  expect_length(a_rows.size(), *m, line_no, "A");
  const Matrix a = Matrix::from_rows(a_rows, *n);
  if (!b) b = Vector{};
  expect_length(b->size(), *m, line_no, "b");

  ParsedInstance out;
  if (general) {
    expect_length(b_rows.size(), *mb, line_no, "B");
    if (!d) fail(line_no, 1, "general form needs 'd:'");
    expect_length(d->size(), *mb, line_no, "d");
    if (c) expect_length(c->size(), *n, line_no, "c");
    out.general = GeneralFormSystem{a, Matrix::from_rows(b_rows, *n), *b, *d, c};
    return out;
  }
  if (!c) fail(line_no, 1, "missing 'c:'");
  expect_length(c->size(), *n, line_no, "c");
  if (capacitated) {
    if (!u) fail(line_no, 1, "capacitated instance needs 'u:'");
    expect_length(u->size(), *n, line_no, "u");
  }
  LpInstance lp{a, *b, *c, u};
  lp.validate();
  out.lp = std::move(lp);
  return out;
}

LpInstance parse_lp(std::string_view text) {
  ParsedInstance p = parse_instance(text);
  if (!p.lp) throw Error(ErrorCode::kParseError, "expected a standard-form instance");
  return *p.lp;
}

std::string render_instance(const LpInstance& inst) {
  std::ostringstream os;
  os << "n=" << inst.n() << " m=" << inst.m();
  if (inst.u) os << " capacitated";
  os << '\n';
  render_rows(os, "A", inst.a);
  os << "b: " << join(inst.b) << '\n';
  os << "c: " << join(inst.c) << '\n';
  if (inst.u) {
    os << "u:";
    for (const auto& ui : *inst.u) os << ' ' << to_string(ui);
    os << '\n';
  }
  return os.str();
}

std::string render_instance(const GeneralFormSystem& sys) {
  std::ostringstream os;
  os << "n=" << sys.n() << " m=" << sys.a.rows() << " general mb=" << sys.b_ineq.rows()
     << '\n';
  render_rows(os, "A", sys.a);
  os << "b: " << join(sys.b) << '\n';
  render_rows(os, "B", sys.b_ineq);
  os << "d: " << join(sys.d) << '\n';
  if (sys.c) os << "c: " << join(*sys.c) << '\n';
  return os.str();
}

Vector parse_vector(std::string_view text) {
  return parse_entries(split(text, 0, true), 1);
}

IndexSet parse_index_set(std::string_view text) {
  std::vector<Index> out;
  for (const auto& t : split(text, 0, true)) out.push_back(parse_count(t, 1));
  return IndexSet(out);
}

}  // namespace circuitlp
