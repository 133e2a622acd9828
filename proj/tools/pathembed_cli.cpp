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

// pathembed: topology generation, single queries and experiment sweeps.
//
// Exit codes: 0 success, 2 bad flags or config, 3 input parse or
// generation failure, 4 no path found, 5 runtime failure during a run.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pathembed/backend.hpp"
#include "pathembed/constraints.hpp"
#include "pathembed/error.hpp"
#include "pathembed/experiment.hpp"
#include "pathembed/path.hpp"
#include "pathembed/text.hpp"
#include "pathembed/topology_gen.hpp"
#include "pathembed/topology_io.hpp"

namespace {

using namespace pathembed;

constexpr int kExitFlags = 2;
constexpr int kExitParse = 3;
constexpr int kExitNoPath = 4;
constexpr int kExitRuntime = 5;

struct Globals {
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
  std::string output;
};

struct GenArgs {
  std::string model = "waxman";
  std::size_t nodes = 100;
  std::optional<double> degree;
  double alpha = 0.15;
  double beta = 0.2;
  std::size_t m = 2;
  double bw_low = 1.0;
  double bw_high = 9.0;
  std::string delay_model = "euclidean_scaled";
  double max_delay = 10.0;
  double delay_low = 1.0;
  double delay_high = 10.0;
  double cpu = 200.0;
};

struct SolveArgs {
  std::string topology;
  std::string src;
  std::string dst;
  std::string backend = "nm-general";
  std::vector<std::string> links;
  std::vector<std::string> paths;
  bool non_strict = false;
};

struct RunArgs {
  std::string config;
  bool plotdata = false;
};

int fail(int code, const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  return code;
}

void write_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kConfigError, "cannot write " + file.string());
  out << text;
  if (!out) throw Error(ErrorCode::kConfigError, "write failed for " + file.string());
}

int cmd_gen(const Globals& globals, const GenArgs& a) {
  GenSpec spec;
  const auto model = parse_model(a.model);
  if (!model) return fail(kExitFlags, "model: unknown model '" + a.model + "'");
  spec.model = *model;
  spec.node_count = a.nodes;
  spec.target_avg_degree = a.degree;
  spec.alpha = a.alpha;
  spec.beta = a.beta;
  spec.ba_m = a.m;
  spec.bw_low = a.bw_low;
  spec.bw_high = a.bw_high;
  if (a.delay_model == "euclidean_scaled") {
    spec.delay_model = DelayModel::kEuclideanScaled;
  } else if (a.delay_model == "uniform") {
    spec.delay_model = DelayModel::kUniform;
  } else {
    return fail(kExitFlags, "delay-model: unknown delay model '" + a.delay_model + "'");
  }
  spec.max_delay = a.max_delay;
  spec.delay_low = a.delay_low;
  spec.delay_high = a.delay_high;
  spec.cpu_units = a.cpu;
  spec.seed = globals.seed.value_or(1);

  try {
    spec.validate();
  } catch (const Error& e) {
    return fail(kExitFlags, e.what());
  }

  PhysicalGraph g;
  try {
    g = generate(spec);
  } catch (const Error& e) {
    return fail(kExitParse, e.what());
  }

  const std::string text = format_topology(g);
  if (globals.output.empty() || globals.output == "-") {
    std::cout << text;
  } else {
    try {
      write_file(globals.output, text);
    } catch (const Error& e) {
      return fail(kExitParse, e.what());
    }
  }
  // Keep stdout clean for the topology when it goes there.
  std::ostream& info = globals.output.empty() || globals.output == "-" ? std::cerr : std::cout;
  info << "nodes=" << g.node_count() << " edges=" << g.edge_count()
       << " avg_degree=" << format_number(average_degree(g)) << '\n';
  return 0;
}

int cmd_solve(const SolveArgs& a) {
  Topology t;
  try {
    t = read_topology_file(a.topology);
  } catch (const Error& e) {
    return fail(kExitParse, e.what());
  }

  const auto src = resolve_node(t, a.src);
  const auto dst = resolve_node(t, a.dst);
  if (!src) return fail(kExitFlags, "src: no node '" + a.src + "'");
  if (!dst) return fail(kExitFlags, "dst: no node '" + a.dst + "'");

  ConstraintSet c;
  Backend backend;
  try {
    std::vector<LinkBound> links;
    std::vector<PathBound> paths;
    bool non_strict = a.non_strict;
    for (const auto& l : a.links) parse_constraint_literal("link " + l, links, paths);
    for (const auto& p : a.paths) {
      if (parse_constraint_literal("path " + p, links, paths) == BoundMode::kNonStrict) {
        non_strict = true;
      }
    }
    c = ConstraintSet(std::move(links), std::move(paths),
                      non_strict ? BoundMode::kNonStrict : BoundMode::kStrict);
    c.validate(t.graph.arity());
    backend = parse_backend(a.backend);
  } catch (const Error& e) {
    return fail(kExitFlags, e.what());
  }

  SolveResult r;
  try {
    r = run_backend(backend, t.graph, *src, *dst, c);
  } catch (const Error& e) {
    // Remaining failures are input preconditions such as negative metrics
    // for a backend that cannot take them.
    return fail(kExitParse, e.what());
  }
  std::cout << format_result_line(r, t.labels) << '\n';
  return r.ok() ? 0 : kExitNoPath;
}

int cmd_run(const Globals& globals, const RunArgs& a) {
  ExperimentConfig cfg;
  try {
    cfg = read_config_file(a.config);
    if (globals.seed) {
      for (SweepSpec& s : cfg.sweeps) s.seeds = {*globals.seed};
    }
  } catch (const Error& e) {
    return fail(kExitFlags, e.what());
  }
  if (!globals.output.empty()) cfg.output = globals.output;

  for (const SweepSpec& s : cfg.sweeps) {
    if (s.scale == Scale::kPaper && s.scenario != Scenario::kVne) {
      std::cerr << "warning: paper scale runs " << s.effective_nodes() << "-node topologies with "
                << s.effective_pairs() << " pairs per cell; expect a long runtime\n";
    }
  }

  std::vector<SweepRow> rows;
  try {
    for (const SweepSpec& s : cfg.sweeps) {
      auto part = sweep(s, globals.jobs);
      rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
    }
  } catch (const std::exception& e) {
    return fail(kExitRuntime, e.what());
  }

  try {
    const std::string csv = format_csv(rows);
    std::filesystem::path plot_dir = ".";
    if (cfg.output && cfg.output->string() != "-") {
      write_file(*cfg.output, csv);
      plot_dir = cfg.output->parent_path().empty() ? "." : cfg.output->parent_path();
    } else {
      std::cout << csv;
    }
    if (a.plotdata) {
      for (const auto& [name, text] : format_plot_data(rows)) write_file(plot_dir / name, text);
    }
  } catch (const Error& e) {
    return fail(kExitRuntime, e.what());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained minimum-hop path embedding: generate, solve, run experiments"};
  app.require_subcommand(1);

  Globals globals;
  app.add_option("--seed", globals.seed, "Random seed (gen) or single-seed override (run)");
  app.add_option("--jobs", globals.jobs, "Sweep cells run in parallel")
      ->default_val(1)
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", globals.output, "Output file ('-' for stdout)");

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random topology file");
  gen_cmd->fallthrough();
  gen_cmd->add_option("--model", gen.model, "waxman or barabasi_albert")->capture_default_str();
  gen_cmd->add_option("--nodes", gen.nodes, "Node count")->capture_default_str();
  gen_cmd->add_option("--degree", gen.degree, "Target average degree");
  gen_cmd->add_option("--alpha", gen.alpha, "Waxman alpha in (0, 1]")->capture_default_str();
  gen_cmd->add_option("--beta", gen.beta, "Waxman beta in (0, 1]")->capture_default_str();
  gen_cmd->add_option("--m", gen.m, "Barabasi-Albert edges per new node")->capture_default_str();
  gen_cmd->add_option("--bw-low", gen.bw_low, "Lowest link bandwidth")->capture_default_str();
  gen_cmd->add_option("--bw-high", gen.bw_high, "Highest link bandwidth")->capture_default_str();
  gen_cmd->add_option("--delay-model", gen.delay_model, "euclidean_scaled or uniform")
      ->capture_default_str();
  gen_cmd->add_option("--max-delay", gen.max_delay, "Largest delay (euclidean_scaled)")
      ->capture_default_str();
  gen_cmd->add_option("--delay-low", gen.delay_low, "Lowest delay (uniform)")
      ->capture_default_str();
  gen_cmd->add_option("--delay-high", gen.delay_high, "Highest delay (uniform)")
      ->capture_default_str();
  gen_cmd->add_option("--cpu", gen.cpu, "CPU units per node")->capture_default_str();

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one constrained path query");
  solve_cmd->fallthrough();
  solve_cmd->add_option("topology", solve.topology, "Topology file")->required();
  solve_cmd->add_option("--src", solve.src, "Source node id or label")->required();
  solve_cmd->add_option("--dst", solve.dst, "Destination node id or label")->required();
  solve_cmd->add_option("--backend", solve.backend,
                        "nm-general | nm-l1 | edijkstra | exhaustive | ksp:<k>[:<ranking>]")
      ->capture_default_str();
  solve_cmd->add_option("--link", solve.links, "Link bound '<metric> >= <value>' (repeatable)");
  solve_cmd->add_option("--path", solve.paths,
                        "Path bound '<metric> < <value>' or '<= <value>' (repeatable)");
  solve_cmd->add_flag("--non-strict", solve.non_strict, "Path bounds admit equality");

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run an experiment config and write CSV");
  run_cmd->fallthrough();
  run_cmd->add_option("config", run.config, "Experiment config file")->required();
  run_cmd->add_flag("--emit-plotdata", run.plotdata,
                    "Also write <metric>_<backend>.dat series next to the CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFlags;
  }

  if (globals.jobs == 0) globals.jobs = std::max(1u, std::thread::hardware_concurrency());
  if (*gen_cmd) return cmd_gen(globals, gen);
  if (*solve_cmd) return cmd_solve(solve);
  return cmd_run(globals, run);
}
