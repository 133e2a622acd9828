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

// Solver selection by name token:
//   nm-general | nm-l1 | edijkstra | exhaustive | ksp:<k>[:<ranking>]
// where <ranking> is by_hops (default) or by_path_metric[=<index>].

#pragma once

#include <string>
#include <string_view>

#include "pathembed/baselines.hpp"
#include "pathembed/nm_solver.hpp"

namespace pathembed {

enum class BackendKind { kNmGeneral, kNmL1, kEDijkstra, kKsp, kExhaustive };

struct Backend {
  BackendKind kind = BackendKind::kNmGeneral;
  KspConfig ksp;
  NmOptions nm;
  ExhaustiveOptions exhaustive;

  std::string name() const;
};

/// Throws Error(kUnknownBackend).
Backend parse_backend(std::string_view token);

/// Runs the backend and stamps SolveResult::micros with wall-clock time.
///
/// Single-bound solvers (nm-l1, edijkstra) given no path bound get an
/// unbounded one on path metric 0, so bandwidth-only requests still route.
/// k-SP ranks paths on `candidates` and checks them on `current`; all other
/// backends search `current` directly.
SolveResult run_backend(const Backend& backend, const GraphView& current,
                        const GraphView& candidates, NodeId src, NodeId dst,
                        const ConstraintSet& c);

inline SolveResult run_backend(const Backend& backend, const GraphView& g, NodeId src,
                               NodeId dst, const ConstraintSet& c) {
  return run_backend(backend, g, g, src, dst, c);
}

}  // namespace pathembed
