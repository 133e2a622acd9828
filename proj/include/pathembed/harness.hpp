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

/// @file harness.hpp
/// Experiment drivers on top of the solvers.
///
/// run_vne embeds whole virtual networks: a greedy node placement followed
/// by one path per virtual link from a pluggable backend. run_steering
/// packs as many equal-demand virtual links as fit between random node
/// pairs. Both work on a private ResidualOverlay and allocate strictly in
/// order, so results are deterministic for fixed inputs.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathembed/backend.hpp"
#include "pathembed/constraints.hpp"
#include "pathembed/graph.hpp"

namespace pathembed {

struct VirtualLink {
  std::size_t a = 0;
  std::size_t b = 0;
  double bw = 0.0;
  std::optional<double> delay_bound;
};

struct VnRequest {
  std::vector<double> cpu;
  std::vector<VirtualLink> links;

  /// Throws Error(kInvalidArgument) on non-positive demands or bad endpoints.
  void validate() const;
};

/// Bandwidth booked along one physical path.
struct Allocation {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
  double bw = 0.0;
};

struct RequestOutcome {
  bool accepted = false;
  std::size_t links_requested = 0;
  /// Physical host of each virtual node (empty if placement failed).
  std::vector<NodeId> placement;
  std::string reason;
};

struct VneReport {
  double vn_allocation_ratio = 1.0;
  double link_allocation_ratio = 1.0;
  double link_utilization = 0.0;
  std::size_t requested_vns = 0;
  std::size_t accepted_vns = 0;
  std::size_t requested_links = 0;
  std::size_t accepted_links = 0;
  std::vector<RequestOutcome> per_request;
  std::vector<Allocation> allocations;
  /// Residual of link metric 0 per edge after the run.
  std::vector<double> final_residual;
};

struct SteeringReport {
  double total_throughput = 0.0;
  double energy_efficiency = 0.0;
  double avg_path_length = 0.0;
  double avg_time_per_vl = 0.0;
  std::size_t n_used = 0;
  std::size_t vl_count = 0;
  std::size_t solver_calls = 0;
  std::vector<Allocation> allocations;
  std::vector<double> final_residual;
};

/// ((N - N_used) / N) * bw_total. Throws Error(kInvalidCounts) unless
/// N > 0 and 0 <= N_used <= N.
double energy_efficiency(std::size_t n, std::size_t n_used, double bw_total);

/// Random virtual networks: each is a chain over a random node order plus
/// every other node pair with a per-request probability drawn from [0, 1],
/// so topologies range from linear to complete. CPU and bandwidth demands
/// are uniform in [1, max_demand].
std::vector<VnRequest> generate_vn_requests(std::size_t count, std::size_t nodes,
                                            double max_demand, std::uint64_t seed);

/// For each request in order: place each virtual node on the unused
/// physical node with the most residual CPU that fits (ties by id), then
/// route each virtual link with `backend` against the residual state
/// (link 0 >= bw, plus path 0 < delay bound when given). Any failure
/// rejects the whole request and rolls back its reservations. Ratios over
/// an empty request list are reported as 1.0.
///
/// Throws Error(kUnknownBackend).
VneReport run_vne(const PhysicalGraph& g, const std::vector<VnRequest>& requests,
                  std::string_view backend);

/// Draws `pairs` distinct ordered (src, dst) pairs, src != dst, and for
/// each repeatedly routes and reserves a virtual link whose demand is the
/// bandwidth bound of `c` (link metric 0) until the backend fails.
///
/// Throws Error(kUnknownBackend), or kInvalidArgument when `c` has no
/// positive bound on link metric 0 or more pairs are requested than exist.
SteeringReport run_steering(const PhysicalGraph& g, std::size_t pairs, const ConstraintSet& c,
                            std::string_view backend, std::uint64_t seed);

/// Same, over caller-chosen (src, dst) pairs in the given order.
SteeringReport run_steering(const PhysicalGraph& g,
                            const std::vector<std::pair<NodeId, NodeId>>& endpoints,
                            const ConstraintSet& c, std::string_view backend);

/// Cheaper variant used for scaling runs: solves each drawn pair once
/// without reserving anything. Fills avg_path_length, avg_time_per_vl,
/// n_used, vl_count (successful solves) and solver_calls.
SteeringReport run_queries(const PhysicalGraph& g, std::size_t pairs, const ConstraintSet& c,
                           std::string_view backend, std::uint64_t seed);

/// Distinct ordered pairs drawn uniformly without replacement.
std::vector<std::pair<NodeId, NodeId>> draw_pairs(std::size_t node_count, std::size_t pairs,
                                                  std::uint64_t seed);

}  // namespace pathembed
