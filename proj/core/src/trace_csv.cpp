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

#include "circuitlp/trace_csv.hpp"

namespace circuitlp {

std::vector<TraceRow> trace_rows(const WalkTrace& trace, const std::string& run_id,
                                 const std::string& algorithm) {
  std::vector<TraceRow> rows;
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const WalkStep& s = trace.steps[t];
    std::string sets;
    if (t + 1 < trace.sets.size()) {
      const DiameterAnalysisSets& a = trace.sets[t + 1];
      sets = "L=" + std::to_string(a.large.size()) + ";T=" +
             std::to_string(a.rest.size()) + ";R=" + std::to_string(a.reached.size());
    }
    rows.push_back(TraceRow{run_id, algorithm, t, static_cast<std::size_t>(s.phase),
                            to_string(s.oracle), s.step,
                            norm1(s.iterate_after, trace.nonbasic), sets});
  }
  return rows;
}

std::vector<TraceRow> trace_rows(const std::vector<SolverStep>& steps,
                                 const std::string& run_id,
                                 const std::string& algorithm) {
  std::vector<TraceRow> rows;
  for (const SolverStep& s : steps) {
    rows.push_back(TraceRow{run_id, algorithm, s.iteration, s.phase,
                            to_string(s.oracle), s.step, s.potential,
                            "L=" + std::to_string(s.large_size) +
                                ";rkL=" + std::to_string(s.large_rank)});
  }
  return rows;
}

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows,
                     bool approx) {
  os << "run_id,algorithm,iteration,phase,oracle,step_size,potential,set_sizes";
  if (approx) os << ",step_size_approx,potential_approx";
  os << '\n';
  for (const TraceRow& r : rows) {
    os << r.run_id << ',' << r.algorithm << ',' << r.iteration << ',' << r.phase
       << ',' << r.oracle << ',' << to_string(r.step_size) << ','
       << to_string(r.potential) << ',' << r.set_sizes;
    if (approx) {
      os << ',' << to_decimal(r.step_size) << ',' << to_decimal(r.potential);
    }
    os << '\n';
  }
}

}  // namespace circuitlp
