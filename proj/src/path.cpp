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

#include "pathembed/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "pathembed/error.hpp"
#include "pathembed/text.hpp"

namespace pathembed {

PathResult make_path(const GraphView& view, NodeId src, std::span<const EdgeId> edges) {
  const MetricArity a = view.arity();
  PathResult p;
  p.nodes.reserve(edges.size() + 1);
  p.nodes.push_back(src);
  p.edges.assign(edges.begin(), edges.end());
  p.accumulated = MetricAccumulator(a.path);
  p.min_link_metrics.assign(a.link, std::numeric_limits<double>::infinity());
  for (EdgeId e : edges) {
    if (view.source(e) != p.nodes.back()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge " + std::to_string(e) + " does not leave node " +
                      std::to_string(p.nodes.back()));
    }
    p.nodes.push_back(view.target(e));
    p.accumulated.extend(view.path_metrics(e));
    const auto lm = view.link_metrics(e);
    for (std::size_t i = 0; i < a.link; ++i) {
      p.min_link_metrics[i] = std::min(p.min_link_metrics[i], lm[i]);
    }
  }
  return p;
}

bool lexicographic_less(const PathResult& a, const PathResult& b) {
  if (a.nodes != b.nodes) return a.nodes < b.nodes;
  return a.edges < b.edges;
}

std::string verify_path(const GraphView& view, const PathResult& path, NodeId src, NodeId dst,
                        const ConstraintSet& c) {
  if (path.nodes.empty()) return "empty node list";
  if (path.nodes.size() != path.edges.size() + 1) return "node/edge count mismatch";
  if (path.nodes.front() != src) return "path does not start at source";
  if (path.nodes.back() != dst) return "path does not end at destination";
  std::unordered_set<NodeId> seen;
  for (NodeId n : path.nodes) {
    if (!seen.insert(n).second) return "node " + std::to_string(n) + " repeats";
  }
  PathResult fresh;
  try {
    fresh = make_path(view, src, path.edges);
  } catch (const Error& e) {
    return e.what();
  }
  if (fresh.nodes != path.nodes) return "edges do not match node sequence";
  for (std::size_t i = 0; i < fresh.accumulated.sums.size(); ++i) {
    const double want = fresh.accumulated.sums[i];
    const double got = path.accumulated.sums.at(i);
    if (std::abs(want - got) > 1e-9 * std::max(1.0, std::abs(want))) {
      return "accumulated metric " + std::to_string(i) + " is stale";
    }
  }
  if (fresh.min_link_metrics != path.min_link_metrics) return "link minima are stale";
  for (const LinkBound& b : c.link_bounds()) {
    if (!(fresh.min_link_metrics[b.metric] >= b.lower)) {
      return "link bound on metric " + std::to_string(b.metric) + " violated";
    }
  }
  for (const PathBound& b : c.path_bounds()) {
    if (!c.within(fresh.accumulated.sums[b.metric], b.upper)) {
      return "path bound on metric " + std::to_string(b.metric) + " violated";
    }
  }
  return {};
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOk: return "ok";
    case SolveStatus::kUnreachable: return "unreachable";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kNegativeCycle: return "negcycle";
    case SolveStatus::kLimit: return "limit";
  }
  return "unknown";
}

std::string format_result_line(const SolveResult& r, std::span<const std::string> labels) {
  std::ostringstream os;
  os << "status=" << to_string(r.status);
  const bool ok = r.ok();
  os << " hops=" << (ok ? static_cast<long long>(r.path.hop_count()) : -1LL);
  os << " path=";
  if (ok) {
    for (std::size_t i = 0; i < r.path.nodes.size(); ++i) {
      const NodeId n = r.path.nodes[i];
      if (i) os << ',';
      if (n < labels.size() && !labels[n].empty()) {
        os << labels[n];
      } else {
        os << n;
      }
    }
  }
  auto list = [&](const std::vector<double>& v) {
    if (!ok) return;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << format_number(v[i]);
  };
  os << " sums=";
  list(r.path.accumulated.sums);
  os << " mins=";
  list(r.path.min_link_metrics);
  os << " micros=" << static_cast<long long>(std::llround(r.micros));
  return os.str();
}

}  // namespace pathembed
