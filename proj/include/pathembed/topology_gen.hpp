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

/// @file topology_gen.hpp
/// Seeded Waxman and Barabasi-Albert substrates with one link metric
/// (bandwidth, Gbps) and one path metric (delay), emitted as symmetric
/// pairs of directed edges with equal metrics.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "pathembed/constraints.hpp"
#include "pathembed/graph.hpp"

namespace pathembed {

enum class TopologyModel { kWaxman, kBarabasiAlbert };
enum class DelayModel { kEuclideanScaled, kUniform };
enum class Severity { kLow, kMed, kHigh };

std::string_view to_string(TopologyModel m);
std::string_view to_string(Severity s);
std::optional<TopologyModel> parse_model(std::string_view s);
std::optional<Severity> parse_severity(std::string_view s);

struct GenSpec {
  TopologyModel model = TopologyModel::kWaxman;
  /// Waxman edge probability alpha * exp(-d / (beta * L)). Alpha is
  /// recalibrated when target_avg_degree is set.
  double alpha = 0.15;
  double beta = 0.2;
  /// Barabasi-Albert edges per arriving node; round(target / 2) when
  /// target_avg_degree is set.
  std::size_t ba_m = 2;
  std::size_t node_count = 100;
  std::optional<double> target_avg_degree;
  double bw_low = 1.0;
  double bw_high = 9.0;
  DelayModel delay_model = DelayModel::kEuclideanScaled;
  /// Largest link delay under kEuclideanScaled.
  double max_delay = 10.0;
  double delay_low = 1.0;
  double delay_high = 10.0;
  double cpu_units = 200.0;
  std::uint64_t seed = 1;

  /// Throws Error(kInvalidArgument) naming the offending field.
  void validate() const;
};

/// Deterministic in `spec` (seed included). Always returns a connected
/// graph: Waxman draws are retried with seed offsets, then remaining
/// components are bridged by their closest node pairs with median metrics.
/// Throws Error(kDegreeUnreachable) if the target degree cannot be met.
PhysicalGraph generate(const GenSpec& spec);

/// Mean undirected degree, counting each directed edge as half a link
/// endpoint pair (edge_count / node_count for symmetric graphs).
double average_degree(const PhysicalGraph& g);

/// True when the graph has a single weakly connected component.
bool weakly_connected(const PhysicalGraph& g);

/// Bandwidth bound on link metric 0 of {1, 4, 7} Gbps for low/med/high and
/// a delay bound on path metric 0 of {0.8, 2.5, 4.0} x the largest link
/// delay for low/med/high (a "high" delay level is the loosest bound).
ConstraintSet resolve_constraint_severity(const PhysicalGraph& g, Severity bw_level,
                                          Severity delay_level);

/// Same bandwidth levels; delay bound = percent / 100 x largest link delay.
ConstraintSet resolve_constraint_percent(const PhysicalGraph& g, Severity bw_level,
                                         double delay_percent);

double bandwidth_bound(Severity level);
double delay_factor(Severity level);

}  // namespace pathembed
