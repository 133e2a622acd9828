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

/// @file experiment.hpp
/// Parameter sweeps over the harness and their text outputs.
///
/// Config grammar (one document may hold several sweeps):
///
///     # comment
///     key = value              top-level keys apply to every sweep
///     [sweep]                  starts a sweep that inherits the top level
///     key = value              overrides for this sweep only
///
/// List values are comma-separated. Seed lists also accept `a..b` and
/// number lists accept `from..to:step`.
/// Without any `[sweep]` section the top level is itself the single sweep.
/// See SweepSpec for the keys.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathembed/topology_gen.hpp"

namespace pathembed {

enum class Scenario { kVne, kSteering, kSolve };
enum class Scale { kDesk, kPaper };

std::string_view to_string(Scenario s);

/// Config keys share the field names below; `output` is top-level only.
struct SweepSpec {
  Scenario scenario = Scenario::kSteering;
  Scale scale = Scale::kDesk;
  /// Topology file used instead of generation.
  std::optional<std::filesystem::path> topology;
  std::vector<TopologyModel> models{TopologyModel::kWaxman};
  /// Defaults to 100 for vne, otherwise 1000 (desk) or 10000 (paper).
  std::optional<std::size_t> nodes;
  std::vector<double> degrees{4.0};
  std::vector<Severity> bw_levels{Severity::kLow};
  std::vector<Severity> delay_levels{Severity::kHigh};
  /// When non-empty, replaces delay_levels as the delay axis.
  std::vector<double> delay_percents;
  std::vector<std::string> backends{"nm-l1", "edijkstra"};
  std::vector<std::uint64_t> seeds{1};
  std::optional<std::size_t> pairs;
  std::size_t requests = 15;
  std::size_t vn_nodes = 14;
  double vn_max_demand = 20.0;
  double alpha = 0.15;
  double beta = 0.2;
  std::optional<double> bw_low;
  std::optional<double> bw_high;
  DelayModel delay_model = DelayModel::kEuclideanScaled;
  double max_delay = 10.0;
  double delay_low = 1.0;
  double delay_high = 10.0;
  std::optional<double> cpu;
  bool timing = false;

  /// Node count after applying the scale default.
  std::size_t effective_nodes() const;
  std::size_t effective_pairs() const;
  /// Topology parameters for one grid cell.
  GenSpec gen_spec(TopologyModel model, double degree, std::uint64_t seed) const;
  /// Number of rows sweep() will produce.
  std::size_t cell_count() const;
  /// Throws Error(kConfigError) naming the offending key.
  void validate() const;
};

struct ExperimentConfig {
  std::vector<SweepSpec> sweeps;
  std::optional<std::filesystem::path> output;
};

/// Throws Error(kConfigError) with the offending key (or line) in the text.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig read_config_file(const std::filesystem::path& file);

/// Applies one `key = value` pair; exposed for the CLI's overrides.
void apply_config_key(SweepSpec& spec, std::string_view key, std::string_view value);

/// One CSV row. Unset optionals print as empty fields.
struct SweepRow {
  std::string model;
  std::size_t nodes = 0;
  double avg_degree = 0.0;
  std::string bw_level;
  std::string delay_level;
  std::string backend;
  std::uint64_t seed = 0;
  std::optional<double> vn_alloc_ratio;
  std::optional<double> link_alloc_ratio;
  std::optional<double> link_util;
  std::optional<double> throughput_gbps;
  std::optional<double> energy_eff;
  std::optional<double> avg_hops;
  std::optional<double> avg_us;
  std::optional<std::size_t> n_used;
  /// Plot coordinates, not part of the CSV: x is the delay percent in
  /// delay sweeps and the grid degree otherwise; series names the block.
  double plot_x = 0.0;
  std::string plot_series;
};

/// Runs every cell of the Cartesian product models x degrees x bw levels x
/// delay levels (or percents) x backends x seeds, up to `jobs` at a time.
/// Rows come back in grid order whatever the completion order.
std::vector<SweepRow> sweep(const SweepSpec& spec, std::size_t jobs = 1);

extern const char* const kCsvHeader;

std::string format_csv(const std::vector<SweepRow>& rows);

/// Whitespace-separated series keyed by file name `<metric>_<backend>.dat`
/// (':' in backend names becomes '_'). Each file holds one block per
/// (model, bw level, delay level or degree) with `x mean count` lines.
std::map<std::string, std::string> format_plot_data(const std::vector<SweepRow>& rows);

/// Evenly spaced percentages from `from` down (or up) to `to` inclusive.
std::vector<double> percent_grid(double from, double to, double step);

}  // namespace pathembed
