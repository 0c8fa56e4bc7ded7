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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "circuitlp/circuits.hpp"
#include "circuitlp/error.hpp"
#include "circuitlp/feasibility.hpp"
#include "circuitlp/general_form.hpp"
#include "circuitlp/generators.hpp"
#include "circuitlp/instance_io.hpp"
#include "circuitlp/optimize.hpp"
#include "circuitlp/trace_csv.hpp"
#include "circuitlp/walks.hpp"

namespace circuitlp {

namespace {

// Bad input from the user, as opposed to a failed internal check.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  bool exact = false;
  bool dual = false;
  std::size_t cap = kDefaultEnumerationCap;
  std::string vector;
  std::string target_basis;
  std::string start;
  std::string kappa_hat;
  std::string trace;
  std::string partition;
  bool aux = false;
  std::string zero_set;
  std::string kind = "generic";
  std::size_t n = 6;
  std::size_t m = 3;
  std::optional<std::uint64_t> seed;
  bool approx = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LpInstance load_lp(const Options& o) { return parse_lp(read_file(o.file)); }

std::string fmt(const Rational& q, bool approx) {
  std::string s = to_string(q);
  if (approx) s += " (~" + to_decimal(q) + ")";
  return s;
}

std::string fmt(const Vector& v, bool approx) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  s += ")";
  if (approx) {
    s += " ~(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += to_decimal(v[i]);
    }
    s += ")";
  }
  return s;
}

Rational kappa_or_default(const Options& o, const Matrix& a) {
  if (!o.kappa_hat.empty()) {
    auto q = parse_rational(o.kappa_hat);
    if (!q || *q < 1) throw UsageError("--kappa-hat must be a rational >= 1");
    return *q;
  }
  if (a.cols() <= kDefaultEnumerationCap) return kappa_exact(a).value;
  return Rational(static_cast<long>(a.cols()));
}

void write_trace(const std::string& path, const std::vector<TraceRow>& rows,
                 bool approx) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw UsageError("cannot write '" + path + "'");
  write_trace_csv(os, rows, approx);
}

void print_report(std::ostream& out, const char* label, const TraceReport& r) {
  if (r.ok()) {
    out << label << ": ok\n";
    return;
  }
  const LemmaViolation& v = *r.first();
  out << label << ": " << r.violations.size() << " finding(s), "
      << r.structural_violations() << " structural; first at t=" << v.iteration
      << " " << v.check << (v.kappa_dependent ? " (estimate-dependent)" : "")
      << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
}

void print_certificate(std::ostream& out, const DualCertificate& d, bool approx) {
  out << "certificate y: " << fmt(d.standard_y(), approx) << "\n";
  out << "certificate s: " << fmt(d.s, approx) << "\n";
}

int run_kappa(const Options& o, std::ostream& out) {
  const LpInstance inst = load_lp(o);
  const KappaEstimate k = o.dual ? kappa_dual(inst.a, o.cap) : kappa_exact(inst.a, o.cap);
  out << "kappa: " << fmt(k.value, o.approx) << "\n";
  out << "method: " << (o.dual ? "dual" : "exact") << "\n";
  return kExitOk;
}

int run_circuits(const Options& o, std::ostream& out) {
  const LpInstance inst = load_lp(o);
  const auto evs = enumerate_elementary_vectors(inst.a, o.cap);
  out << "elementary vectors: " << evs.size() << "\n";
  for (const auto& ev : evs) {
    out << ev.circuit.to_string() << " " << fmt(ev.g, false) << "\n";
  }
  return kExitOk;
}

int run_decompose(const Options& o, std::ostream& out) {
  const LpInstance inst = load_lp(o);
  const Vector x = parse_vector(o.vector);
  if (x.size() != inst.n()) throw UsageError("--vector has the wrong length");
  const ConformalDecomposition d = conformal_decompose(inst.a, x);
  out << "parts: " << d.parts.size() << "\n";
  for (const auto& p : d.parts) out << fmt(p.g, o.approx) << "\n";
  return kExitOk;
}

int run_walk(const Options& o, std::ostream& out) {
  const LpInstance inst = load_lp(o);
  const Rational kappa = kappa_or_default(o, inst.a);
  const WalkTrace trace = diameter_walk(inst.a, inst.b, parse_index_set(o.target_basis),
                                        parse_vector(o.start), kappa);
  out << "kappa_hat: " << to_string(kappa) << "\n";
  out << "steps: " << trace.steps.size() << "\n";
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const WalkStep& s = trace.steps[t];
    out << "step " << t << ": alpha=" << fmt(s.step, o.approx)
        << " g=" << fmt(s.direction.g, false) << "\n";
  }
  out << "target: " << fmt(trace.target, o.approx) << "\n";
  print_report(out, "checks", check_trace_lemmas(trace, kappa));
  write_trace(o.trace, trace_rows(trace, "walk", "diameter_walk"), o.approx);
  return kExitOk;
}

Partition parse_partition(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw UsageError("--partition expects B:L:H");
  return {parse_index_set(parts[0]), parse_index_set(parts[1]),
          parse_index_set(parts[2])};
}

int run_cap_walk(const Options& o, std::ostream& out) {
  const LpInstance inst = load_lp(o);
  if (!inst.u) throw UsageError("cap-walk needs a capacitated instance");
  const Partition p = parse_partition(o.partition);
  const Rational kappa = kappa_or_default(o, inst.a);
  const CapacitatedTrace trace = capacitated_walk(
      inst.a, inst.b, *inst.u, p, parse_vector(o.start), kappa);
  out << "kappa_hat: " << to_string(kappa) << "\n";
  out << "phase one steps: " << trace.phase_one_steps << " (support calls "
      << trace.support_calls << ")\n";
  out << "steps: " << trace.walk.steps.size() << "\n";
  out << "target: " << fmt(trace.walk.target, o.approx) << "\n";
  print_report(out, "phase one checks", check_capacitated_trace(trace, p));
  print_report(out, "phase two checks", check_trace_lemmas(trace.reformulated, kappa));
  write_trace(o.trace, trace_rows(trace.walk, "cap-walk", "capacitated_walk"), o.approx);
  return kExitOk;
}

int run_feas(const Options& o, std::ostream& out) {
  const LpInstance inst = load_lp(o);
  if (o.aux == !o.zero_set.empty()) {
    throw UsageError("feas needs exactly one of --aux or --zero-set");
  }
  if (o.aux) {
    const PhaseOneResult r = find_feasible_point(inst.a, inst.b);
    if (r.x) {
      out << "feasible: " << fmt(*r.x, o.approx) << "\n";
      return kExitOk;
    }
    out << "infeasible\n";
    print_certificate(out, *r.certificate, o.approx);
    return kExitNegative;
  }
  if (o.start.empty()) throw UsageError("--zero-set needs --start");
  const FeasibilityRun run = feasibility_auto(inst.a, inst.b, parse_index_set(o.zero_set),
                                              parse_vector(o.start));
  out << "kappa_hat: " << to_string(run.kappa_hat) << "\n";
  out << "calls: ratio " << run.result.calls.ratio << ", support "
      << run.result.calls.support << "\n";
  write_trace(o.trace, trace_rows(run.result.steps, "feas", "feasibility"), o.approx);
  if (run.result.x) {
    out << "solution: " << fmt(*run.result.x, o.approx) << "\n";
    return kExitOk;
  }
  out << "no solution with x_N = 0\n";
  print_certificate(out, *run.result.certificate, o.approx);
  return kExitNegative;
}

int run_solve(const Options& o, std::ostream& out) {
  const LpInstance inst = load_lp(o);
  std::optional<Vector> start;
  if (!o.start.empty()) start = parse_vector(o.start);
  const SolveResult r = solve(inst, start);
  std::vector<TraceRow> rows;
  if (r.phase_one) {
    rows = trace_rows(r.phase_one->run.result.steps, "solve", "feasibility");
  }
  if (r.phase_two) {
    auto more = trace_rows(r.phase_two->result.steps, "solve", "variable_fixing");
    rows.insert(rows.end(), more.begin(), more.end());
    out << "kappa_hat: " << to_string(r.phase_two->kappa_hat) << "\n";
  }
  write_trace(o.trace, rows, o.approx);
  out << "status: " << to_string(r.status) << "\n";
  switch (r.status) {
    case LpStatus::kOptimal:
      out << "x: " << fmt(*r.x, o.approx) << "\n";
      out << "objective: " << fmt(*r.objective, o.approx) << "\n";
      return kExitOk;
    case LpStatus::kUnbounded:
      out << "ray: " << fmt(*r.ray, o.approx) << "\n";
      return kExitNegative;
    case LpStatus::kInfeasible:
      print_certificate(out, *r.infeasibility, o.approx);
      return kExitNegative;
  }
  return kExitInternal;
}

int run_reduce_general(const Options& o, std::ostream& out) {
  const ParsedInstance parsed = parse_instance(read_file(o.file));
  if (!parsed.general) throw UsageError("reduce-general needs a general-form file");
  const GeneralFormReduction red = general_form_reduce(*parsed.general);
  out << "# slack-space standard form\n";
  out << render_instance(red.standard());
  if (parsed.general->c) {
    out << "# objective offset: " << to_string(red.objective_offset()) << "\n";
  }
  return kExitOk;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CIRCUITLP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("CIRCUITLP_SEED must be an unsigned integer");
    }
  }
  return 1;
}

std::string join(const IndexSet& s) {
  std::string t;
  for (Index i : s) t += (t.empty() ? "" : ",") + std::to_string(i);
  return t;
}

int run_gen(const Options& o, std::ostream& out) {
  const auto kind = parse_instance_kind(o.kind);
  if (!kind) throw UsageError("--kind must be tu, generic or cap");
  const std::uint64_t seed = o.seed ? *o.seed : default_seed();
  const GeneratedInstance g = generate_instance(*kind, o.n, o.m, seed);
  out << render_instance(g.instance);
  out << "# seed: " << seed << "\n";
  out << "# start: " << to_string(g.start, ',') << "\n";
  out << "# target-basis: " << join(g.target_basis) << "\n";
  if (g.partition) {
    out << "# partition: " << join(g.partition->basis) << ":" << join(g.partition->lower)
        << ":" << join(g.partition->upper) << "\n";
  }
  return kExitOk;
}

bool is_usage(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kRankDeficient:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInfeasibleStart:
    case ErrorCode::kSingularBasis:
    case ErrorCode::kTooLarge:
    case ErrorCode::kLinealitySpace:
    case ErrorCode::kNotInKernel:
      return true;
    default:
      return false;
  }
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  CLI::App app{"Circuit augmentation toolkit for linear programs", "circuitlp"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--approx", o.approx, "Append decimal approximations");
  std::function<int(const Options&, std::ostream&)> action;

  auto command = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* kappa = command("kappa", "Circuit imbalance of A", run_kappa);
  kappa->add_option("file", o.file)->required();
  auto* exact = kappa->add_flag("--exact", o.exact, "Enumerate circuits of A (default)");
  kappa->add_flag("--dual", o.dual, "Enumerate circuits of the row space")->excludes(exact);
  kappa->add_option("--cap", o.cap, "Column cap for enumeration");

  auto* circuits = command("circuits", "List elementary vectors of ker(A)", run_circuits);
  circuits->add_option("file", o.file)->required();
  circuits->add_option("--cap", o.cap, "Column cap for enumeration");

  auto* decompose = command("decompose", "Conformal circuit decomposition", run_decompose);
  decompose->add_option("file", o.file)->required();
  decompose->add_option("--vector", o.vector, "Kernel vector, comma separated")->required();

  auto* walk = command("walk", "Circuit walk to a target vertex", run_walk);
  walk->add_option("file", o.file)->required();
  walk->add_option("--target-basis", o.target_basis, "0-based basis ids")->required();
  walk->add_option("--start", o.start, "Start vertex")->required();
  walk->add_option("--kappa-hat", o.kappa_hat, "Imbalance estimate");
  walk->add_option("--trace", o.trace, "CSV trace output");

  auto* cap_walk = command("cap-walk", "Circuit walk in a box-constrained polytope", run_cap_walk);
  cap_walk->add_option("file", o.file)->required();
  cap_walk->add_option("--partition", o.partition, "Target partition B:L:H")->required();
  cap_walk->add_option("--start", o.start, "Start vertex")->required();
  cap_walk->add_option("--kappa-hat", o.kappa_hat, "Imbalance estimate");
  cap_walk->add_option("--trace", o.trace, "CSV trace output");

  auto* feas = command("feas", "Feasibility by circuit augmentation", run_feas);
  feas->add_option("file", o.file)->required();
  feas->add_flag("--aux", o.aux, "Find a point of {Ax = b, x >= 0}");
  feas->add_option("--zero-set", o.zero_set, "Find x in P with x_N = 0");
  feas->add_option("--start", o.start, "Feasible start for --zero-set");
  feas->add_option("--trace", o.trace, "CSV trace output");

  auto* solve_cmd = command("solve", "Solve min <c,x> over P", run_solve);
  solve_cmd->add_option("file", o.file)->required();
  solve_cmd->add_option("--start", o.start, "Feasible start; skips phase one");
  solve_cmd->add_option("--trace", o.trace, "CSV trace output");

  auto* reduce = command("reduce-general", "Slack-space form of {Ax = b, Bx <= d}",
                         run_reduce_general);
  reduce->add_option("file", o.file)->required();

  auto* gen = command("gen", "Generate a random instance with two vertices", run_gen);
  gen->add_option("--kind", o.kind, "tu, generic or cap");
  gen->add_option("--n", o.n, "Columns");
  gen->add_option("--m", o.m, "Rows");
  gen->add_option("--seed", o.seed, "Seed (default: $CIRCUITLP_SEED or 1)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return action(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage(e.code()) ? kExitUsage : kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace circuitlp
