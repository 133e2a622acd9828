// Copyright 2026 The pathembed Authors
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

// Acceptance runner. Prints one [PASS] or [FAIL] line per criterion and
// exits nonzero if any failed. Progress goes to stderr.
//
//   acceptance [--quick]
//
// --quick shrinks the steering, VNE and scaling grids for a smoke run; the
// verdicts it prints are not the acceptance verdicts.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "instances.hpp"
#include "oracle.hpp"
#include "pathembed/backend.hpp"
#include "pathembed/baselines.hpp"
#include "pathembed/error.hpp"
#include "pathembed/experiment.hpp"
#include "pathembed/harness.hpp"
#include "pathembed/nm_solver.hpp"
#include "pathembed/path.hpp"
#include "pathembed/residual.hpp"
#include "pathembed/text.hpp"
#include "pathembed/topology_gen.hpp"

namespace {

using namespace pathembed;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Every ok result produced anywhere in the run passes through here.
struct Audit {
  std::size_t checked = 0;
  std::vector<std::string> problems;

  void result(const GraphView& g, const SolveResult& r, NodeId src, NodeId dst,
              const ConstraintSet& c, const std::string& where) {
    if (!r.ok()) return;
    ++checked;
    const std::string why = oracle::violation(g, r.path, src, dst, c);
    if (!why.empty()) problems.push_back(where + ": " + why);
  }

  // Replays reservations in order so each path is checked against the
  // residual state it was routed on.
  void allocations(const PhysicalGraph& g, const std::vector<Allocation>& allocs,
                   const std::vector<PathBound>& paths, const std::string& where) {
    ResidualOverlay o(g);
    for (const Allocation& a : allocs) {
      ++checked;
      const ConstraintSet c({{0, a.bw}}, paths);
      try {
        const PathResult p = make_path(o.view(), a.nodes.front(), a.edges);
        const std::string why = oracle::violation(o.view(), p, a.nodes.front(), a.nodes.back(), c);
        if (!why.empty()) problems.push_back(where + ": " + why);
        o.reserve(a.edges, std::vector<double>{a.bw});
      } catch (const Error& e) {
        problems.push_back(where + ": " + e.what());
      }
    }
  }
};

std::string fmt(double v) { return format_number(v); }

std::string status_line(const SolveResult& r) {
  std::ostringstream s;
  s << to_string(r.status);
  for (NodeId n : r.path.nodes) s << ' ' << n;
  return s.str();
}

// Oracle equivalence over seeded random instances. Compares the solver's
// hop count with both the exhaustive backend and the brute-force oracle.
Verdict oracle_suite(const std::string& name, std::size_t trials, std::size_t max_nodes,
                     std::size_t path_arity, double budget_s, std::uint64_t seed, bool general,
                     Audit& audit, std::string& log) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(seed);
  std::size_t matched = 0, feasible = 0;
  std::string first_mismatch;
  std::ostringstream trace;
  for (std::size_t t = 0; t < trials; ++t) {
    const fixtures::Instance inst = fixtures::random_instance(rng, max_nodes, path_arity);
    const GraphView g(inst.graph);
    const SolveResult r = general ? solve_general(g, inst.src, inst.dst, inst.constraints)
                                  : solve_l1(g, inst.src, inst.dst, inst.constraints);
    const SolveResult ex = solve_exhaustive(g, inst.src, inst.dst, inst.constraints);
    const oracle::Answer want = oracle::solve(g, inst.src, inst.dst, inst.constraints);
    audit.result(g, r, inst.src, inst.dst, inst.constraints, name);
    trace << status_line(r) << '\n';

    bool ok;
    if (want.min_hops) {
      ++feasible;
      ok = r.ok() && ex.ok() && r.path.hop_count() == *want.min_hops &&
           ex.path.hop_count() == *want.min_hops;
    } else {
      ok = !r.ok() && !ex.ok() && r.status != SolveStatus::kLimit &&
           r.status != SolveStatus::kNegativeCycle;
    }
    if (ok) {
      ++matched;
    } else if (first_mismatch.empty()) {
      first_mismatch = " first mismatch at trial " + std::to_string(t);
    }
  }
  log += trace.str();
  const double secs = seconds_since(t0);
  Verdict v{name, matched == trials && secs < budget_s, ""};
  v.detail = std::to_string(matched) + "/" + std::to_string(trials) + " match (" +
             std::to_string(feasible) + " feasible), " + fmt(std::round(secs * 10) / 10) +
             " s of " + fmt(budget_s) + " s" + first_mismatch;
  return v;
}

Verdict worked_example(Audit& audit) {
  const PhysicalGraph g = fixtures::worked_example();
  const ConstraintSet c = fixtures::worked_constraints();
  const std::vector<NodeId> want{fixtures::kX, fixtures::kB, fixtures::kA, fixtures::kY};
  Verdict v{"worked example", true, ""};
  for (const char* b : {"nm-general", "nm-l1", "ksp:1", "edijkstra"}) {
    const SolveResult r = run_backend(parse_backend(b), g, fixtures::kX, fixtures::kY, c);
    audit.result(g, r, fixtures::kX, fixtures::kY, c, std::string("worked example ") + b);
    bool ok;
    if (std::strcmp(b, "ksp:1") == 0) {
      ok = r.status == SolveStatus::kInfeasible;
    } else if (std::strcmp(b, "edijkstra") == 0) {
      ok = !r.ok() || r.path.hop_count() >= 3;
    } else {
      ok = r.ok() && r.path.nodes == want;
    }
    v.pass = v.pass && ok;
    if (!v.detail.empty()) v.detail += "; ";
    v.detail += std::string(b) + " " + status_line(r);
  }
  return v;
}

Verdict negative_cycle(Audit& audit) {
  const PhysicalGraph g = fixtures::negative_cycle();
  const ConstraintSet c({{0, 5.0}}, {{0, 5.0}});
  const SolveResult r = solve_l1(g, 0, 4, c);
  audit.result(g, r, 0, 4, c, "negative cycle");
  return {"negative cycle detection", r.status == SolveStatus::kNegativeCycle,
          "solve_l1 status=" + std::string(to_string(r.status))};
}

struct Mean {
  double sum = 0.0;
  std::size_t n = 0;
  void add(double v) {
    sum += v;
    ++n;
  }
  double get() const { return n ? sum / static_cast<double>(n) : 0.0; }
};

SweepSpec steering_spec(bool quick) {
  SweepSpec s;
  s.scenario = Scenario::kSteering;
  s.nodes = quick ? 200 : 1000;
  s.degrees = {3, 4, 5, 6};
  s.bw_levels = {Severity::kLow};
  s.delay_levels = {Severity::kHigh};
  s.backends = {"nm-l1", "edijkstra"};
  s.seeds.clear();
  for (std::uint64_t i = 1; i <= (quick ? 2u : 10u); ++i) s.seeds.push_back(i);
  s.pairs = quick ? 20 : 100;
  return s;
}

SweepSpec vne_spec(bool quick) {
  SweepSpec s;
  s.scenario = Scenario::kVne;
  s.nodes = 100;
  s.requests = 15;
  s.vn_nodes = 14;
  s.backends = {"nm-general", "ksp:1", "ksp:3"};
  s.seeds.clear();
  for (std::uint64_t i = 1; i <= (quick ? 3u : 20u); ++i) s.seeds.push_back(i);
  return s;
}

struct SteeringOutcome {
  Verdict trends;
  Verdict energy;
  std::string csv;
};

SteeringOutcome steering(const SweepSpec& spec, Audit& audit) {
  const auto t0 = Clock::now();
  const std::vector<SweepRow> rows = sweep(spec);
  const double secs = seconds_since(t0);

  // degree -> backend -> means
  std::map<double, std::map<std::string, Mean>> thr, hops, energy;
  for (const SweepRow& r : rows) {
    thr[r.avg_degree][r.backend].add(r.throughput_gbps.value_or(0.0));
    hops[r.avg_degree][r.backend].add(r.avg_hops.value_or(0.0));
    energy[r.avg_degree][r.backend].add(r.energy_eff.value_or(0.0));
  }

  SteeringOutcome out;
  out.csv = format_csv(rows);
  out.trends = {"steering trends", secs < 1800.0, ""};
  out.energy = {"energy ordering", true, ""};
  for (const auto& [deg, by] : thr) {
    const double nt = by.at("nm-l1").get(), et = by.at("edijkstra").get();
    const double nh = hops[deg].at("nm-l1").get(), eh = hops[deg].at("edijkstra").get();
    const double ne = energy[deg].at("nm-l1").get(), ee = energy[deg].at("edijkstra").get();
    out.trends.pass = out.trends.pass && nt >= et && nh <= eh;
    // Every grid point uses the loosest severity pair, so strictness
    // applies at each degree.
    out.energy.pass = out.energy.pass && ne >= 0.95 * ee && ne > ee;
    out.trends.detail += "d=" + fmt(deg) + " thr " + fmt(std::round(nt * 10) / 10) + "/" +
                         fmt(std::round(et * 10) / 10) + " hops " +
                         fmt(std::round(nh * 1000) / 1000) + "/" +
                         fmt(std::round(eh * 1000) / 1000) + "; ";
    out.energy.detail += "d=" + fmt(deg) + " " + fmt(std::round(ne * 10) / 10) + "/" +
                         fmt(std::round(ee * 10) / 10) + "; ";
  }
  out.trends.detail += "nm-l1/edijkstra, " + fmt(std::round(secs)) + " s of 1800 s";
  out.energy.detail += "nm-l1/edijkstra means";

  // Replay every reservation of the first two seeds against fresh residuals.
  for (double deg : spec.degrees) {
    for (std::size_t i = 0; i < std::min<std::size_t>(2, spec.seeds.size()); ++i) {
      const PhysicalGraph g = generate(spec.gen_spec(TopologyModel::kWaxman, deg, spec.seeds[i]));
      const ConstraintSet c = resolve_constraint_severity(g, Severity::kLow, Severity::kHigh);
      for (const std::string& b : spec.backends) {
        const SteeringReport r = run_steering(g, spec.effective_pairs(), c, b, spec.seeds[i]);
        audit.allocations(g, r.allocations, c.path_bounds(), "steering " + b);
      }
    }
  }
  return out;
}

struct VneOutcome {
  Verdict verdict;
  std::string csv;
};

VneOutcome vne(const SweepSpec& spec, Audit& audit) {
  const std::vector<SweepRow> rows = sweep(spec);
  std::map<std::string, Mean> vn, link;
  std::map<std::uint64_t, std::map<std::string, double>> per_seed;
  for (const SweepRow& r : rows) {
    vn[r.backend].add(r.vn_alloc_ratio.value_or(0.0));
    link[r.backend].add(r.link_alloc_ratio.value_or(0.0));
    per_seed[r.seed][r.backend] = r.link_alloc_ratio.value_or(0.0);
  }
  VneOutcome out;
  out.csv = format_csv(rows);
  out.verdict = {"vne improvement", true, ""};
  const double nv = vn["nm-general"].get(), nl = link["nm-general"].get();
  for (const char* b : {"ksp:1", "ksp:3"}) {
    out.verdict.pass = out.verdict.pass && nv >= vn[b].get() && nl >= link[b].get();
  }
  std::size_t strict = 0;
  for (auto& [seed, by] : per_seed) {
    if (by["nm-general"] > by["ksp:1"] || by["nm-general"] > by["ksp:3"]) ++strict;
  }
  out.verdict.pass = out.verdict.pass && strict > 0;
  out.verdict.detail = "vn_alloc " + fmt(std::round(nv * 1000) / 1000) + " vs " +
                       fmt(std::round(vn["ksp:1"].get() * 1000) / 1000) + "/" +
                       fmt(std::round(vn["ksp:3"].get() * 1000) / 1000) + ", link_alloc " +
                       fmt(std::round(nl * 1000) / 1000) + " vs " +
                       fmt(std::round(link["ksp:1"].get() * 1000) / 1000) + "/" +
                       fmt(std::round(link["ksp:3"].get() * 1000) / 1000) +
                       " (nm-general vs ksp:1/ksp:3), strict VL wins on " +
                       std::to_string(strict) + "/" + std::to_string(per_seed.size()) + " seeds";

  for (std::uint64_t seed : spec.seeds) {
    const PhysicalGraph g =
        generate(spec.gen_spec(TopologyModel::kWaxman, spec.degrees.front(), seed));
    const auto requests = generate_vn_requests(spec.requests, spec.vn_nodes, spec.vn_max_demand, seed);
    for (const std::string& b : spec.backends) {
      audit.allocations(g, run_vne(g, requests, b).allocations, {}, "vne " + b);
    }
  }
  return out;
}

// Least-squares slope of log(mean solve time) against log(node count).
Verdict scaling(bool quick, Audit& audit, std::string& log) {
  const std::vector<std::size_t> sizes{250, 500, 1000, 2000};
  const std::size_t queries = quick ? 40 : 200;
  const std::size_t graphs = quick ? 1 : 3;
  std::vector<double> xs, ys;
  std::string detail;
  for (std::size_t n : sizes) {
    double total_us = 0.0;
    std::size_t count = 0;
    for (std::uint64_t seed = 1; seed <= graphs; ++seed) {
      GenSpec gs;
      gs.node_count = n;
      gs.target_avg_degree = 4.0;
      gs.seed = seed;
      const PhysicalGraph g = generate(gs);
      const ConstraintSet c = resolve_constraint_severity(g, Severity::kLow, Severity::kHigh);
      for (const auto& [s, d] : draw_pairs(n, queries, seed)) {
        const auto t0 = Clock::now();
        const SolveResult r = solve_l1(g, s, d, c);
        total_us += seconds_since(t0) * 1e6;
        ++count;
        audit.result(g, r, s, d, c, "scaling");
        log += status_line(r) + '\n';
      }
    }
    const double mean = total_us / static_cast<double>(count);
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(mean));
    detail += std::to_string(n) + ":" + fmt(std::round(mean * 10) / 10) + "us ";
  }
  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return {"l1 quadratic scaling", slope <= 2.4,
          detail + "slope " + fmt(std::round(slope * 100) / 100) + " (limit 2.4)"};
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const auto t0 = Clock::now();
  Audit audit;
  std::vector<Verdict> verdicts;
  std::string l1_log, general_log, scaling_log;

  std::cerr << "l1 oracle suite\n";
  verdicts.push_back(
      oracle_suite("l1 oracle equivalence", 500, 12, 1, 60.0, 2026, false, audit, l1_log));
  std::cerr << "general oracle suite\n";
  verdicts.push_back(oracle_suite("general oracle equivalence", 300, 10, 2, 120.0, 4052, true,
                                  audit, general_log));
  verdicts.push_back(worked_example(audit));
  const std::size_t bound_slot = verdicts.size();
  verdicts.push_back({"bound re-verification", false, ""});

  std::cerr << "steering grid\n";
  const SweepSpec steer_spec = steering_spec(quick);
  SteeringOutcome steer = steering(steer_spec, audit);
  verdicts.push_back(steer.trends);
  verdicts.push_back(steer.energy);

  std::cerr << "vne grid\n";
  const SweepSpec vne_sp = vne_spec(quick);
  VneOutcome v = vne(vne_sp, audit);
  verdicts.push_back(v.verdict);

  std::cerr << "scaling\n";
  verdicts.push_back(scaling(quick, audit, scaling_log));
  verdicts.push_back(negative_cycle(audit));

  std::cerr << "determinism reruns\n";
  {
    Audit scratch;
    std::string l1_again, general_again, scaling_again;
    oracle_suite("", 500, 12, 1, 1e9, 2026, false, scratch, l1_again);
    oracle_suite("", 300, 10, 2, 1e9, 4052, true, scratch, general_again);
    scaling(quick, scratch, scaling_again);
    const std::string steer_again = format_csv(sweep(steer_spec));
    const std::string vne_again = format_csv(sweep(vne_sp));
    std::vector<std::string> differ;
    if (l1_again != l1_log) differ.push_back("l1 suite");
    if (general_again != general_log) differ.push_back("general suite");
    if (scaling_again != scaling_log) differ.push_back("scaling paths");
    if (steer_again != steer.csv) differ.push_back("steering csv");
    if (vne_again != v.csv) differ.push_back("vne csv");
    Verdict d{"determinism", differ.empty(), ""};
    d.detail = differ.empty() ? "steering csv " + std::to_string(steer.csv.size()) +
                                    " bytes, vne csv " + std::to_string(v.csv.size()) +
                                    " bytes and solver traces identical on rerun"
                              : "differs:";
    for (const std::string& what : differ) d.detail += " " + what;
    verdicts.push_back(d);
  }

  Verdict& bounds = verdicts[bound_slot];
  bounds.pass = audit.problems.empty() && audit.checked > 0;
  bounds.detail = std::to_string(audit.checked) + " ok results and reservations re-checked, " +
                  std::to_string(audit.problems.size()) + " violations";
  if (!audit.problems.empty()) bounds.detail += " (first: " + audit.problems.front() + ")";

  int failed = 0;
  if (quick) std::cout << "quick mode: reduced grids, verdicts are indicative only\n";
  for (const Verdict& v : verdicts) {
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << v.name << ": " << v.detail << '\n';
    failed += v.pass ? 0 : 1;
  }
  std::cout << verdicts.size() - failed << "/" << verdicts.size() << " criteria passed in "
            << fmt(std::round(seconds_since(t0))) << " s\n";
  return failed == 0 ? 0 : 1;
}
