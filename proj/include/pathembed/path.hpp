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

/// @file path.hpp
/// Solver output types and the one-line result serialization.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathembed/constraints.hpp"
#include "pathembed/graph.hpp"

namespace pathembed {

/// A loop-free path. `edges[i]` connects `nodes[i]` to `nodes[i + 1]`;
/// carrying edge handles keeps parallel edges unambiguous.
struct PathResult {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
  MetricAccumulator accumulated;
  /// Component-wise minimum of link metrics over the traversed edges;
  /// +inf for a zero-hop path.
  std::vector<double> min_link_metrics;

  std::size_t hop_count() const noexcept { return edges.size(); }

  bool operator==(const PathResult&) const = default;
};

/// Builds the full PathResult for an edge sequence starting at `src`,
/// summing path metrics and taking link minima as seen through `view`.
/// Throws Error(kInvalidArgument) if the edges do not chain.
PathResult make_path(const GraphView& view, NodeId src, std::span<const EdgeId> edges);

/// Orders paths by node sequence, then by edge handles.
bool lexicographic_less(const PathResult& a, const PathResult& b);

/// Re-checks a result from scratch: loop-free, edges chain from src to dst,
/// aggregates consistent with the view, all bounds of `c` met. Returns an
/// empty string when valid, otherwise a description of the first problem.
std::string verify_path(const GraphView& view, const PathResult& path, NodeId src, NodeId dst,
                        const ConstraintSet& c);

enum class SolveStatus { kOk, kUnreachable, kInfeasible, kNegativeCycle, kLimit };

std::string_view to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::kUnreachable;
  PathResult path;
  double micros = 0.0;

  bool ok() const noexcept { return status == SolveStatus::kOk; }
};

/// `status=<..> hops=<n> path=<id,..> sums=<v,..> mins=<v,..> micros=<t>`.
/// Non-ok results print hops=-1 and empty lists. When `labels` is non-empty
/// it maps node ids to display names (empty entries fall back to the id).
std::string format_result_line(const SolveResult& r,
                               std::span<const std::string> labels = {});

}  // namespace pathembed
