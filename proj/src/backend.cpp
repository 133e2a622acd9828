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

#include "pathembed/backend.hpp"

#include <chrono>
#include <limits>

#include "pathembed/error.hpp"
#include "pathembed/text.hpp"

namespace pathembed {

std::string Backend::name() const {
  switch (kind) {
    case BackendKind::kNmGeneral: return "nm-general";
    case BackendKind::kNmL1: return "nm-l1";
    case BackendKind::kEDijkstra: return "edijkstra";
    case BackendKind::kExhaustive: return "exhaustive";
    case BackendKind::kKsp: {
      std::string s = "ksp:" + std::to_string(ksp.k) + ":";
      if (ksp.ranking == KspRanking::kByHops) return s + "by_hops";
      return s + "by_path_metric=" + std::to_string(ksp.metric);
    }
  }
  return "unknown";
}

Backend parse_backend(std::string_view token) {
  Backend b;
  if (token == "nm-general") return b;
  if (token == "nm-l1") {
    b.kind = BackendKind::kNmL1;
    return b;
  }
  if (token == "edijkstra") {
    b.kind = BackendKind::kEDijkstra;
    return b;
  }
  if (token == "exhaustive") {
    b.kind = BackendKind::kExhaustive;
    return b;
  }
  auto unknown = [&]() -> Backend {
    throw Error(ErrorCode::kUnknownBackend,
                "unknown backend '" + std::string(token) +
                    "' (expected nm-general, nm-l1, edijkstra, exhaustive or ksp:<k>[:<ranking>])");
  };
  const auto parts = split(token, ':');
  if (parts.size() < 2 || parts.size() > 3 || parts[0] != "ksp") return unknown();
  const auto k = parse_index(parts[1]);
  if (!k || *k == 0) return unknown();
  b.kind = BackendKind::kKsp;
  b.ksp.k = *k;
  if (parts.size() == 3) {
    const std::string_view r = parts[2];
    if (r == "by_hops") {
      b.ksp.ranking = KspRanking::kByHops;
    } else if (r == "by_path_metric") {
      b.ksp.ranking = KspRanking::kByPathMetric;
    } else if (r.starts_with("by_path_metric=")) {
      const auto idx = parse_index(r.substr(15));
      if (!idx) return unknown();
      b.ksp.ranking = KspRanking::kByPathMetric;
      b.ksp.metric = *idx;
    } else {
      return unknown();
    }
  }
  return b;
}

SolveResult run_backend(const Backend& backend, const GraphView& current,
                        const GraphView& candidates, NodeId src, NodeId dst,
                        const ConstraintSet& c) {
  const bool single_bound =
      backend.kind == BackendKind::kNmL1 || backend.kind == BackendKind::kEDijkstra;
  ConstraintSet effective = c;
  if (single_bound && c.path_count() == 0 && current.arity().path > 0) {
    effective = ConstraintSet(c.link_bounds(),
                              {{0, std::numeric_limits<double>::infinity()}}, c.mode());
  }

  const auto start = std::chrono::steady_clock::now();
  SolveResult r;
  switch (backend.kind) {
    case BackendKind::kNmGeneral:
      r = solve_general(current, src, dst, effective, backend.nm);
      break;
    case BackendKind::kNmL1:
      r = solve_l1(current, src, dst, effective);
      break;
    case BackendKind::kEDijkstra:
      r = solve_edijkstra(current, src, dst, effective);
      break;
    case BackendKind::kKsp:
      r = solve_ksp(candidates, current, src, dst, effective, backend.ksp);
      break;
    case BackendKind::kExhaustive:
      r = solve_exhaustive(current, src, dst, effective, backend.exhaustive);
      break;
  }
  const auto end = std::chrono::steady_clock::now();
  r.micros = std::chrono::duration<double, std::micro>(end - start).count();
  return r;
}

}  // namespace pathembed
