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

#ifndef CIRCUITLP_INSTANCE_IO_HPP_
#define CIRCUITLP_INSTANCE_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "circuitlp/general_form.hpp"
#include "circuitlp/lp_instance.hpp"

namespace circuitlp {

// Line-oriented text format:
//
//   n=3 m=1 [capacitated] [general mb=2]
//   A: 1 1 1        (one line per row)
//   b: 4
//   c: 1 -1/2 0
//   u: 2 inf 3      (capacitated only)
//   B: 1 0 0        (general form only, one line per row)
//   d: 5 7          (general form only)
//
// Entries are integers or p/q; '#' starts a comment.
struct ParsedInstance {
  std::optional<LpInstance> lp;
  std::optional<GeneralFormSystem> general;
};

// Throws kParseError (message carries line:column), kDimensionMismatch and
// kRankDeficient.
ParsedInstance parse_instance(std::string_view text);
LpInstance parse_lp(std::string_view text);

std::string render_instance(const LpInstance& inst);
std::string render_instance(const GeneralFormSystem& sys);

// Comma- or space-separated rationals, e.g. "1,0,1/2".
Vector parse_vector(std::string_view text);
// Comma- or space-separated 0-based indices.
IndexSet parse_index_set(std::string_view text);

}  // namespace circuitlp

#endif  // CIRCUITLP_INSTANCE_IO_HPP_
