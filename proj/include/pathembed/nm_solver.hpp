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

/// @file nm_solver.hpp
/// Neighborhoods Method: minimum-hop loop-free paths under link (concave)
/// and path (additive) constraints.
///
/// Two solvers share the neighborhood idea, where level k holds nodes
/// reached from the source in k hops:
///
///  - solve_general handles any number of path bounds. It grows the level
///    list until the destination appears, enumerates every loop-free path of
///    exactly that many hops by walking the levels backwards from the
///    destination, and adds one level at a time until some candidate meets
///    every bound. Worst case is exponential in the hop count.
///
///  - solve_l1 handles exactly one path bound in polynomial time. Levels are
///    built by relaxation: a node enters level k only if a k-hop walk beats
///    its best known distance and stays below the bound, and it leaves any
///    earlier level when that happens. The destination's level is the
///    minimum feasible hop count; back-tracking predecessors recovers it.
///
/// All solvers are pure functions of an immutable GraphView and may run
/// concurrently.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pathembed/constraints.hpp"
#include "pathembed/graph.hpp"
#include "pathembed/path.hpp"

namespace pathembed {

/// Level k = nodes reached from the source with k hops. Each level is kept
/// sorted by node id.
struct NeighborhoodList {
  std::vector<std::vector<NodeId>> levels;
  /// Deepest level each node belongs to, if any.
  std::vector<std::optional<std::size_t>> last_level;

  std::size_t depth() const noexcept { return levels.empty() ? 0 : levels.size() - 1; }
  bool contains(std::size_t level, NodeId n) const;
};

/// Predecessor / distance / level labels of the single-bound forward pass.
struct SearchLabels {
  std::vector<std::optional<NodeId>> predecessor;
  std::vector<double> distance;
  std::vector<std::optional<std::size_t>> level;

  bool operator==(const SearchLabels&) const = default;
};

/// Every node unlabeled: no predecessor, distance 0, no level.
SearchLabels init_labels(std::size_t node_count);

struct NmOptions {
  /// Upper bound on partial paths generated by backward passes during one
  /// solve_general call. Exceeding it yields SolveStatus::kLimit.
  std::size_t candidate_limit = 1'000'000;
};

/// Forward pass over edges that satisfy the link bounds of `c`. Returns
/// nullopt when `dst` does not appear within |V| levels (or the frontier
/// dies out). Level k is the union of the out-neighbours of level k - 1,
/// so nodes can recur across levels.
std::optional<NeighborhoodList> build_neighborhoods(const GraphView& g, NodeId src, NodeId dst,
                                                    const ConstraintSet& c);

/// Appends one level to `nh`. Returns false, leaving `nh` untouched, if that
/// would exceed |V| levels or produce an empty level.
bool extend_neighborhoods(const GraphView& g, NeighborhoodList& nh, const ConstraintSet& c);

/// All loop-free paths from level 0 to `dst` with exactly depth() hops whose
/// i-th node lies in level i, restricted to edges satisfying the link
/// bounds of `link_filter`. Sorted by node sequence.
/// Throws Error(kInvalidArgument) if `dst` is not in the deepest level.
std::vector<PathResult> backward_pass(const GraphView& g, const NeighborhoodList& nh, NodeId dst,
                                      const ConstraintSet& link_filter = {});

/// Any number of link and path bounds. Returns the node-lexicographically
/// smallest feasible path of minimum hop count.
///
/// kUnreachable: dst not reachable over link-feasible edges.
/// kInfeasible:  reachable, but no loop-free path meets the path bounds.
/// kLimit:       NmOptions::candidate_limit exceeded.
SolveResult solve_general(const GraphView& g, NodeId src, NodeId dst, const ConstraintSet& c,
                          const NmOptions& options = {});

/// State of a solve_l1 run, for inspection and tests.
struct L1Trace {
  NeighborhoodList neighborhoods;
  SearchLabels labels;
};

/// Exactly one path bound (Error kInvalidArgument otherwise), any number of
/// link bounds. Ties between equal-hop paths go to the first label found
/// when scanning the frontier and adjacency lists in ascending order.
///
/// kUnreachable:   dst not reachable over link-feasible edges.
/// kInfeasible:    reachable, but the path bound rules out every path.
/// kNegativeCycle: the level count reached |V| while labels still improve,
///                 or the recovered walk revisits a node.
SolveResult solve_l1(const GraphView& g, NodeId src, NodeId dst, const ConstraintSet& c,
                     L1Trace* trace = nullptr);

/// Whether `dst` is reachable from `src` over edges meeting the link bounds.
bool link_reachable(const GraphView& g, NodeId src, NodeId dst, const ConstraintSet& c);

}  // namespace pathembed
