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

// Hand-built fixtures and seeded random instances shared by the tests and
// the acceptance runner.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pathembed/constraints.hpp"
#include "pathembed/graph.hpp"

namespace fixtures {

using pathembed::ConstraintSet;
using pathembed::EdgeSpec;
using pathembed::NodeId;
using pathembed::PhysicalGraph;

inline constexpr NodeId kX = 0, kA = 1, kB = 2, kY = 3;

// Directed, metrics [bandwidth | delay]. Under bw >= 5 and delay < 5 no
// 2-hop route is feasible (X-A-Y sums 7; B->Y has bandwidth 3), while
// X-B-A-Y sums 1 + 1 + 2 = 4 with every bandwidth >= 5.
inline PhysicalGraph worked_example() {
  const std::vector<EdgeSpec> edges = {
      {kX, kA, {{5}, {5}}}, {kX, kB, {{6}, {1}}}, {kA, kB, {{5}, {3}}},
      {kB, kA, {{5}, {1}}}, {kA, kY, {{7}, {2}}}, {kB, kY, {{3}, {1}}},
  };
  return pathembed::build_graph(4, edges);
}

inline ConstraintSet worked_constraints() { return ConstraintSet({{0, 5.0}}, {{0, 5.0}}); }

// X=0 -> A=1 -> B=2 -> C=3 -> A closes a cycle of delay 1 + 1 - 3 = -1;
// the destination Y=4 hangs off C behind a delay of 10 and bound 5.
inline PhysicalGraph negative_cycle() {
  const std::vector<EdgeSpec> edges = {
      {0, 1, {{9}, {1}}}, {1, 2, {{9}, {1}}}, {2, 3, {{9}, {1}}},
      {3, 1, {{9}, {-3}}}, {3, 4, {{9}, {10}}},
  };
  return pathembed::build_graph(5, edges);
}

struct Instance {
  PhysicalGraph graph;
  NodeId src = 0;
  NodeId dst = 0;
  ConstraintSet constraints;
};

// Directed G(n, 0.3) with integer bandwidth in [1, 9] and `path_arity`
// integer delays in [1, 10]. One bandwidth bound in [1, 9] and one delay
// bound per path metric in [1, 30].
inline Instance random_instance(std::mt19937_64& rng, std::size_t max_nodes,
                                std::size_t path_arity) {
  auto pick = [&](int lo, int hi) {
    return static_cast<double>(std::uniform_int_distribution<int>(lo, hi)(rng));
  };
  std::bernoulli_distribution edge(0.3);
  const auto n = static_cast<std::size_t>(pick(2, static_cast<int>(max_nodes)));
  std::vector<EdgeSpec> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v || !edge(rng)) continue;
      EdgeSpec e{u, v, {{pick(1, 9)}, {}}};
      for (std::size_t i = 0; i < path_arity; ++i) e.metrics.path.push_back(pick(1, 10));
      edges.push_back(std::move(e));
    }
  }
  Instance inst;
  inst.graph = pathembed::build_graph(n, edges, {}, pathembed::MetricArity{1, path_arity});
  inst.src = static_cast<NodeId>(pick(0, static_cast<int>(n) - 1));
  inst.dst = static_cast<NodeId>(pick(0, static_cast<int>(n) - 1));
  std::vector<pathembed::PathBound> paths;
  for (std::size_t i = 0; i < path_arity; ++i) paths.push_back({i, pick(1, 30)});
  inst.constraints = ConstraintSet({{0, pick(1, 9)}}, std::move(paths));
  return inst;
}

}  // namespace fixtures
