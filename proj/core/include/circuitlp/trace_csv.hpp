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

#ifndef CIRCUITLP_TRACE_CSV_HPP_
#define CIRCUITLP_TRACE_CSV_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "circuitlp/solver_step.hpp"
#include "circuitlp/walks.hpp"

namespace circuitlp {

struct TraceRow {
  std::string run_id;
  std::string algorithm;
  std::size_t iteration = 0;
  std::size_t phase = 0;
  std::string oracle;
  Rational step_size;
  Rational potential;
  std::string set_sizes;
};

// Walk rows: potential ||x_N||_1 after the step; sets "L=..;T=..;R=..".
std::vector<TraceRow> trace_rows(const WalkTrace& trace, const std::string& run_id,
                                 const std::string& algorithm);
// Solver rows: potential as recorded in the step; sets "L=..;rkL=..".
std::vector<TraceRow> trace_rows(const std::vector<SolverStep>& steps,
                                 const std::string& run_id,
                                 const std::string& algorithm);

// Header plus one line per row; rationals as p/q. `approx` appends decimal
// columns for step_size and potential.
void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows,
                     bool approx = false);

}  // namespace circuitlp

#endif  // CIRCUITLP_TRACE_CSV_HPP_
