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

#include "pathembed/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "pathembed/backend.hpp"
#include "pathembed/error.hpp"
#include "pathembed/harness.hpp"
#include "pathembed/text.hpp"
#include "pathembed/topology_io.hpp"

namespace pathembed {

const char* const kCsvHeader =
    "model,nodes,avg_degree,bw_level,delay_level,backend,seed,vn_alloc_ratio,link_alloc_ratio,"
    "link_util,throughput_gbps,energy_eff,avg_hops,avg_us,n_used";

namespace {

[[noreturn]] void config_error(std::string_view key, const std::string& why) {
  throw Error(ErrorCode::kConfigError, std::string(key) + ": " + why);
}

double number(std::string_view key, std::string_view v) {
  const auto d = parse_double(v);
  if (!d || !std::isfinite(*d)) config_error(key, "'" + std::string(v) + "' is not a number");
  return *d;
}

std::size_t count(std::string_view key, std::string_view v) {
  const auto n = parse_index(v);
  if (!n) config_error(key, "'" + std::string(v) + "' is not a non-negative integer");
  return *n;
}

std::vector<std::string_view> items(std::string_view key, std::string_view v) {
  std::vector<std::string_view> out;
  for (std::string_view part : split(v, ',')) {
    if (part.empty()) config_error(key, "empty list item");
    out.push_back(part);
  }
  if (out.empty()) config_error(key, "empty list");
  return out;
}

// `a..b` expands to every integer in between, either direction.
std::vector<std::uint64_t> seed_list(std::string_view key, std::string_view v) {
  std::vector<std::uint64_t> out;
  for (std::string_view item : items(key, v)) {
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const std::size_t a = count(key, trim(item.substr(0, dots)));
      const std::size_t b = count(key, trim(item.substr(dots + 2)));
      if (a <= b) {
        for (std::size_t s = a; s <= b; ++s) out.push_back(s);
      } else {
        for (std::size_t s = a + 1; s-- > b;) out.push_back(s);
      }
    } else {
      out.push_back(count(key, item));
    }
  }
  return out;
}

// Numbers, or `from..to:step` for an evenly spaced run.
std::vector<double> number_list(std::string_view key, std::string_view v) {
  std::vector<double> out;
  for (std::string_view item : items(key, v)) {
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(number(key, item));
      continue;
    }
    const auto colon = item.find(':', dots);
    if (colon == std::string_view::npos) config_error(key, "range needs ':<step>'");
    const double from = number(key, trim(item.substr(0, dots)));
    const double to = number(key, trim(item.substr(dots + 2, colon - dots - 2)));
    const double step = number(key, trim(item.substr(colon + 1)));
    if (!(step > 0.0)) config_error(key, "range step must be > 0");
    const auto grid = percent_grid(from, to, step);
    out.insert(out.end(), grid.begin(), grid.end());
  }
  return out;
}

std::vector<Severity> severity_list(std::string_view key, std::string_view v) {
  std::vector<Severity> out;
  for (std::string_view item : items(key, v)) {
    const auto s = parse_severity(item);
    if (!s) config_error(key, "unknown level '" + std::string(item) + "' (low, med, high)");
    out.push_back(*s);
  }
  return out;
}

bool boolean(std::string_view key, std::string_view v) {
  if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "off" || v == "0" || v == "no") return false;
  config_error(key, "expected true or false");
}

struct GraphKey {
  TopologyModel model;
  double degree;
  std::uint64_t seed;

  bool operator==(const GraphKey& o) const {
    return model == o.model && degree == o.degree && seed == o.seed;
  }
};

struct Cell {
  std::size_t graph;
  TopologyModel model;
  double degree;
  std::optional<Severity> bw;
  std::optional<Severity> delay;
  std::optional<double> percent;
  std::string backend;
  std::uint64_t seed;
};

// Runs fn(i) for i in [0, n) on up to `jobs` threads; rethrows the first
// failure once every worker has stopped.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; !failed && (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!first) first = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first) std::rethrow_exception(first);
}

SweepRow run_cell(const SweepSpec& spec, const Cell& cell, const PhysicalGraph& g) {
  SweepRow row;
  row.model = spec.topology ? "file" : std::string(to_string(cell.model));
  row.nodes = g.node_count();
  row.avg_degree = spec.topology ? average_degree(g) : cell.degree;
  row.backend = cell.backend;
  row.seed = cell.seed;
  row.plot_x = cell.percent ? *cell.percent : row.avg_degree;

  if (spec.scenario == Scenario::kVne) {
    row.plot_series = row.model;
    const auto requests =
        generate_vn_requests(spec.requests, spec.vn_nodes, spec.vn_max_demand, cell.seed);
    const VneReport r = run_vne(g, requests, cell.backend);
    row.vn_alloc_ratio = r.vn_allocation_ratio;
    row.link_alloc_ratio = r.link_allocation_ratio;
    row.link_util = r.link_utilization;
    return row;
  }

  row.bw_level = std::string(to_string(*cell.bw));
  ConstraintSet c;
  if (cell.percent) {
    row.delay_level = format_number(*cell.percent);
    row.plot_series = row.model + " degree=" + format_number(row.avg_degree) + " bw=" + row.bw_level;
    c = resolve_constraint_percent(g, *cell.bw, *cell.percent);
  } else {
    row.delay_level = std::string(to_string(*cell.delay));
    row.plot_series = row.model + " bw=" + row.bw_level + " delay=" + row.delay_level;
    c = resolve_constraint_severity(g, *cell.bw, *cell.delay);
  }

  const std::size_t pairs = spec.effective_pairs();
  const SteeringReport r = spec.scenario == Scenario::kSteering
                               ? run_steering(g, pairs, c, cell.backend, cell.seed)
                               : run_queries(g, pairs, c, cell.backend, cell.seed);
  if (spec.scenario == Scenario::kSteering) {
    row.throughput_gbps = r.total_throughput;
    row.energy_eff = r.energy_efficiency;
  }
  row.avg_hops = r.avg_path_length;
  if (spec.timing) row.avg_us = r.avg_time_per_vl;
  row.n_used = r.n_used;
  return row;
}

void put(std::ostringstream& os, const std::optional<double>& v) {
  os << ',';
  if (v) os << format_number(*v);
}

}  // namespace

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::kVne: return "vne";
    case Scenario::kSteering: return "steering";
    case Scenario::kSolve: return "solve";
  }
  return "unknown";
}

std::size_t SweepSpec::effective_nodes() const {
  if (nodes) return *nodes;
  if (scenario == Scenario::kVne) return 100;
  return scale == Scale::kPaper ? 10000 : 1000;
}

std::size_t SweepSpec::effective_pairs() const {
  if (pairs) return *pairs;
  return scale == Scale::kPaper ? 1000 : 100;
}

GenSpec SweepSpec::gen_spec(TopologyModel model, double degree, std::uint64_t seed) const {
  const bool vne = scenario == Scenario::kVne;
  GenSpec g;
  g.model = model;
  g.alpha = alpha;
  g.beta = beta;
  g.node_count = effective_nodes();
  g.target_avg_degree = degree;
  g.bw_low = bw_low.value_or(vne ? 200.0 : 1.0);
  g.bw_high = bw_high.value_or(vne ? 200.0 : 9.0);
  g.delay_model = delay_model;
  g.max_delay = max_delay;
  g.delay_low = delay_low;
  g.delay_high = delay_high;
  g.cpu_units = cpu.value_or(200.0);
  g.seed = seed;
  return g;
}

std::size_t SweepSpec::cell_count() const {
  std::size_t n = (topology ? 1 : models.size() * degrees.size()) * backends.size() * seeds.size();
  if (scenario != Scenario::kVne) {
    n *= bw_levels.size() * (delay_percents.empty() ? delay_levels.size() : delay_percents.size());
  }
  return n;
}

void SweepSpec::validate() const {
  if (models.empty()) config_error("models", "empty list");
  if (degrees.empty()) config_error("degrees", "empty list");
  for (double d : degrees) {
    if (!(d > 0.0)) config_error("degrees", "must be > 0");
  }
  if (backends.empty()) config_error("backends", "empty list");
  for (const auto& b : backends) {
    try {
      parse_backend(b);
    } catch (const Error& e) {
      config_error("backends", e.what());
    }
  }
  if (seeds.empty()) config_error("seeds", "empty list");
  if (bw_levels.empty()) config_error("bw_levels", "empty list");
  if (delay_levels.empty() && delay_percents.empty()) config_error("delay_levels", "empty list");
  for (double p : delay_percents) {
    if (!(p > 0.0)) config_error("delay_percents", "must be > 0");
  }
  if (effective_pairs() == 0) config_error("pairs", "must be >= 1");
  if (vn_nodes < 2) config_error("vn_nodes", "must be >= 2");
  if (!(vn_max_demand >= 1.0)) config_error("vn_max_demand", "must be >= 1");
  if (!topology) {
    try {
      gen_spec(models.front(), degrees.front(), seeds.front()).validate();
    } catch (const Error& e) {
      config_error("topology parameters", e.what());
    }
  }
}

void apply_config_key(SweepSpec& s, std::string_view key, std::string_view v) {
  if (key == "scenario") {
    if (v == "vne") {
      s.scenario = Scenario::kVne;
    } else if (v == "steering") {
      s.scenario = Scenario::kSteering;
    } else if (v == "solve") {
      s.scenario = Scenario::kSolve;
    } else {
      config_error(key, "unknown scenario '" + std::string(v) + "' (vne, steering, solve)");
    }
  } else if (key == "scale") {
    if (v == "desk") {
      s.scale = Scale::kDesk;
    } else if (v == "paper") {
      s.scale = Scale::kPaper;
    } else {
      config_error(key, "unknown scale '" + std::string(v) + "' (desk, paper)");
    }
  } else if (key == "topology") {
    s.topology = std::filesystem::path(std::string(v));
  } else if (key == "models") {
    s.models.clear();
    for (std::string_view item : items(key, v)) {
      const auto m = parse_model(item);
      if (!m) config_error(key, "unknown model '" + std::string(item) + "'");
      s.models.push_back(*m);
    }
  } else if (key == "nodes") {
    s.nodes = count(key, v);
  } else if (key == "degrees") {
    s.degrees = number_list(key, v);
  } else if (key == "bw_levels") {
    s.bw_levels = severity_list(key, v);
  } else if (key == "delay_levels") {
    s.delay_levels = severity_list(key, v);
  } else if (key == "delay_percents") {
    s.delay_percents = number_list(key, v);
  } else if (key == "backends") {
    s.backends.clear();
    for (std::string_view item : items(key, v)) s.backends.emplace_back(item);
  } else if (key == "seeds") {
    s.seeds = seed_list(key, v);
  } else if (key == "pairs") {
    s.pairs = count(key, v);
  } else if (key == "requests") {
    s.requests = count(key, v);
  } else if (key == "vn_nodes") {
    s.vn_nodes = count(key, v);
  } else if (key == "vn_max_demand") {
    s.vn_max_demand = number(key, v);
  } else if (key == "alpha") {
    s.alpha = number(key, v);
  } else if (key == "beta") {
    s.beta = number(key, v);
  } else if (key == "bw_low") {
    s.bw_low = number(key, v);
  } else if (key == "bw_high") {
    s.bw_high = number(key, v);
  } else if (key == "delay_model") {
    if (v == "euclidean_scaled") {
      s.delay_model = DelayModel::kEuclideanScaled;
    } else if (v == "uniform") {
      s.delay_model = DelayModel::kUniform;
    } else {
      config_error(key, "unknown delay model '" + std::string(v) + "'");
    }
  } else if (key == "max_delay") {
    s.max_delay = number(key, v);
  } else if (key == "delay_low") {
    s.delay_low = number(key, v);
  } else if (key == "delay_high") {
    s.delay_high = number(key, v);
  } else if (key == "cpu") {
    s.cpu = number(key, v);
  } else if (key == "timing") {
    s.timing = boolean(key, v);
  } else {
    config_error(key, "unknown key");
  }
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  SweepSpec top;
  // Section bodies are replayed over the finished top level, so top-level
  // keys written after a section still apply to it.
  std::vector<std::vector<std::pair<std::string, std::string>>> sections;
  std::vector<std::pair<std::string, std::string>>* current = nullptr;

  std::size_t lineno = 0;
  for (std::string_view raw : split_lines(text)) {
    ++lineno;
    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line != "[sweep]") {
        throw Error(ErrorCode::kConfigError,
                    "line " + std::to_string(lineno) + ": unknown section " + std::string(line));
      }
      current = &sections.emplace_back();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kConfigError,
                  "line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "output") {
      if (current) config_error(key, "only allowed at top level");
      cfg.output = std::filesystem::path(std::string(value));
    } else if (current) {
      current->emplace_back(key, value);
    } else {
      apply_config_key(top, key, value);
    }
  }

  if (sections.empty()) {
    top.validate();
    cfg.sweeps.push_back(std::move(top));
    return cfg;
  }
  for (const auto& body : sections) {
    SweepSpec spec = top;
    for (const auto& [k, v] : body) apply_config_key(spec, k, v);
    spec.validate();
    cfg.sweeps.push_back(std::move(spec));
  }
  return cfg;
}

ExperimentConfig read_config_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::kConfigError, "cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<SweepRow> sweep(const SweepSpec& spec, std::size_t jobs) {
  spec.validate();

  std::vector<GraphKey> keys;
  std::vector<Cell> cells;
  auto graph_index = [&](const GraphKey& k) {
    const auto it = std::find(keys.begin(), keys.end(), k);
    if (it != keys.end()) return static_cast<std::size_t>(it - keys.begin());
    keys.push_back(k);
    return keys.size() - 1;
  };

  const std::vector<TopologyModel> models =
      spec.topology ? std::vector<TopologyModel>{TopologyModel::kWaxman} : spec.models;
  const std::vector<double> degrees = spec.topology ? std::vector<double>{0.0} : spec.degrees;
  const bool vne = spec.scenario == Scenario::kVne;
  const std::vector<std::optional<Severity>> bws =
      vne ? std::vector<std::optional<Severity>>{std::nullopt}
          : std::vector<std::optional<Severity>>(spec.bw_levels.begin(), spec.bw_levels.end());
  struct DelayAxis {
    std::optional<Severity> level;
    std::optional<double> percent;
  };
  std::vector<DelayAxis> delays;
  if (vne) {
    delays.push_back({});
  } else if (!spec.delay_percents.empty()) {
    for (double p : spec.delay_percents) delays.push_back({std::nullopt, p});
  } else {
    for (Severity s : spec.delay_levels) delays.push_back({s, std::nullopt});
  }

  for (TopologyModel m : models) {
    for (double d : degrees) {
      for (const auto& bw : bws) {
        for (const DelayAxis& delay : delays) {
          for (const std::string& b : spec.backends) {
            for (std::uint64_t seed : spec.seeds) {
              const GraphKey key{m, d, spec.topology ? 0 : seed};
              cells.push_back({graph_index(key), m, d, bw, delay.level, delay.percent, b, seed});
            }
          }
        }
      }
    }
  }

  std::vector<std::unique_ptr<PhysicalGraph>> graphs(keys.size());
  if (spec.topology) {
    graphs[0] = std::make_unique<PhysicalGraph>(read_topology_file(*spec.topology).graph);
  } else {
    parallel_for(keys.size(), jobs, [&](std::size_t i) {
      graphs[i] = std::make_unique<PhysicalGraph>(
          generate(spec.gen_spec(keys[i].model, keys[i].degree, keys[i].seed)));
    });
  }

  std::vector<SweepRow> rows(cells.size());
  parallel_for(cells.size(), jobs, [&](std::size_t i) {
    rows[i] = run_cell(spec, cells[i], *graphs[cells[i].graph]);
  });
  return rows;
}

std::string format_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    os << r.model << ',' << r.nodes << ',' << format_number(r.avg_degree) << ',' << r.bw_level
       << ',' << r.delay_level << ',' << r.backend << ',' << r.seed;
    put(os, r.vn_alloc_ratio);
    put(os, r.link_alloc_ratio);
    put(os, r.link_util);
    put(os, r.throughput_gbps);
    put(os, r.energy_eff);
    put(os, r.avg_hops);
    put(os, r.avg_us);
    os << ',';
    if (r.n_used) os << *r.n_used;
    os << '\n';
  }
  return os.str();
}

std::map<std::string, std::string> format_plot_data(const std::vector<SweepRow>& rows) {
  using Getter = std::optional<double> (*)(const SweepRow&);
  static const std::pair<const char*, Getter> kMetrics[] = {
      {"vn_alloc", [](const SweepRow& r) { return r.vn_alloc_ratio; }},
      {"link_alloc", [](const SweepRow& r) { return r.link_alloc_ratio; }},
      {"link_util", [](const SweepRow& r) { return r.link_util; }},
      {"throughput", [](const SweepRow& r) { return r.throughput_gbps; }},
      {"energy", [](const SweepRow& r) { return r.energy_eff; }},
      {"hops", [](const SweepRow& r) { return r.avg_hops; }},
      {"time_us", [](const SweepRow& r) { return r.avg_us; }},
  };

  // file -> series (first-seen order) -> x -> (sum, count)
  struct Series {
    std::string name;
    std::map<double, std::pair<double, std::size_t>> points;
  };
  std::map<std::string, std::vector<Series>> files;
  for (const SweepRow& r : rows) {
    std::string backend = r.backend;
    std::replace(backend.begin(), backend.end(), ':', '_');
    for (const auto& [metric, get] : kMetrics) {
      const auto v = get(r);
      if (!v) continue;
      auto& series = files[std::string(metric) + "_" + backend + ".dat"];
      auto it = std::find_if(series.begin(), series.end(),
                             [&](const Series& s) { return s.name == r.plot_series; });
      if (it == series.end()) it = series.insert(series.end(), {r.plot_series, {}});
      auto& [sum, n] = it->points[r.plot_x];
      sum += *v;
      ++n;
    }
  }

  std::map<std::string, std::string> out;
  for (const auto& [file, series] : files) {
    std::ostringstream os;
    bool first = true;
    for (const Series& s : series) {
      if (!first) os << "\n\n";  // blank lines separate gnuplot index blocks
      first = false;
      os << "# " << s.name << "\n# x mean count\n";
      for (const auto& [x, acc] : s.points) {
        os << format_number(x) << ' ' << format_number(acc.first / static_cast<double>(acc.second))
           << ' ' << acc.second << '\n';
      }
    }
    out[file] = os.str();
  }
  return out;
}

std::vector<double> percent_grid(double from, double to, double step) {
  if (!(step > 0.0)) throw Error(ErrorCode::kInvalidArgument, "step must be > 0");
  const double dir = to >= from ? 1.0 : -1.0;
  const auto n = static_cast<std::size_t>(std::floor(std::abs(to - from) / step + 1e-9));
  std::vector<double> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(from + dir * step * static_cast<double>(i));
  return out;
}

}  // namespace pathembed
