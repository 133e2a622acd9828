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

/// @file baselines.hpp
/// Comparison solvers: Extended Dijkstra (link pruning + least-delay
/// search), k-shortest loop-free paths (Yen) and exhaustive enumeration.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pathembed/constraints.hpp"
#include "pathembed/graph.hpp"
#include "pathembed/path.hpp"

namespace pathembed {

enum class KspRanking { kByHops, kByPathMetric };

struct KspConfig {
  std::size_t k = 1;
  KspRanking ranking = KspRanking::kByHops;
  /// Path metric used when ranking == kByPathMetric.
  std::size_t metric = 0;

  bool operator==(const KspConfig&) const = default;
};

/// Prunes edges failing the link bounds, then returns the path minimizing
/// the single bounded path metric (ties: fewer hops, then node order). Hop
/// count is not minimized.
///
/// Throws kInvalidArgument unless exactly one path bound is given, and
/// kNegativeMetric if that metric is negative on any edge.
SolveResult solve_edijkstra(const GraphView& g, NodeId src, NodeId dst, const ConstraintSet& c);

/// Ranks loop-free paths of `candidates` (no pruning) and returns the first
/// of the leading cfg.k whose links and sums, read through `check`, meet
/// every bound. `candidates` and `check` must share the same base graph;
/// passing a base view and a residual view models pre-computed paths
/// checked against current state.
///
/// kUnreachable: no src->dst path in `candidates`.
/// kInfeasible:  none of the first k candidates is feasible.
SolveResult solve_ksp(const GraphView& candidates, const GraphView& check, NodeId src, NodeId dst,
                      const ConstraintSet& c, const KspConfig& cfg);

inline SolveResult solve_ksp(const GraphView& g, NodeId src, NodeId dst, const ConstraintSet& c,
                             const KspConfig& cfg) {
  return solve_ksp(g, g, src, dst, c, cfg);
}

/// Incremental Yen enumeration of loop-free paths in (cost, hops, node
/// sequence, edge sequence) order, where cost is the hop count or the
/// chosen path metric.
class KShortestPaths {
 public:
  KShortestPaths(const GraphView& g, NodeId src, NodeId dst, KspRanking ranking,
                 std::size_t metric = 0);

  /// Next path in order, or nullopt when exhausted.
  std::optional<PathResult> next();

 private:
  struct Candidate {
    double cost;
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;
    bool operator<(const Candidate& o) const;
    bool operator==(const Candidate& o) const { return edges == o.edges; }
  };

  std::optional<Candidate> spur_search(NodeId from, const std::vector<char>& banned_nodes,
                                       const std::vector<char>& banned_edges) const;
  double weight(EdgeId e) const;

  GraphView g_;
  NodeId src_;
  NodeId dst_;
  KspRanking ranking_;
  std::size_t metric_;
  bool started_ = false;
  std::vector<Candidate> accepted_;
  std::vector<Candidate> pending_;  // kept sorted, unique
};

struct ExhaustiveOptions {
  /// Refuse graphs larger than this (status kLimit).
  std::size_t max_nodes = 14;
};

/// Enumerates every simple src->dst path depth-first and returns the
/// feasible one minimizing (hop count, node sequence). Used as the test
/// oracle for the other solvers.
///
/// kUnreachable: no simple path whose edges all meet the link bounds.
/// kInfeasible:  such paths exist but none meets the path bounds.
SolveResult solve_exhaustive(const GraphView& g, NodeId src, NodeId dst, const ConstraintSet& c,
                             const ExhaustiveOptions& options = {});

}  // namespace pathembed
