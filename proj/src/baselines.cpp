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

#include "pathembed/baselines.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>

#include "pathembed/error.hpp"

namespace pathembed {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

void check_endpoints(const GraphView& g, NodeId src, NodeId dst) {
  if (src >= g.node_count() || dst >= g.node_count()) {
    throw Error(ErrorCode::kIndexOutOfRange, "source or destination out of range");
  }
}

struct LeastCostPath {
  double cost = 0.0;
  std::vector<EdgeId> edges;
};

// Dijkstra keyed on (cost, hops); equal keys are resolved by comparing the
// node then edge sequences from the source, which is consistent because
// every predecessor of a node has a strictly smaller key.
std::optional<LeastCostPath> least_cost_path(const GraphView& g, NodeId src, NodeId dst,
                                             const std::function<double(EdgeId)>& weight,
                                             const std::function<bool(EdgeId)>& allowed,
                                             const std::vector<char>* banned_nodes = nullptr) {
  const std::size_t n = g.node_count();
  std::vector<double> dist(n, kInf);
  std::vector<std::size_t> hops(n, 0);
  std::vector<EdgeId> via(n, kNoEdge);
  std::vector<char> done(n, 0);

  auto chain = [&](NodeId v, std::vector<NodeId>& nodes, std::vector<EdgeId>& edges) {
    nodes.clear();
    edges.clear();
    for (NodeId x = v; x != src; x = g.source(via[x])) {
      nodes.push_back(x);
      edges.push_back(via[x]);
    }
    nodes.push_back(src);
    std::reverse(nodes.begin(), nodes.end());
    std::reverse(edges.begin(), edges.end());
  };
  std::vector<NodeId> na, nb;
  std::vector<EdgeId> ea, eb;
  // True if reaching v through edge e (from u) beats v's current label,
  // given equal (cost, hops).
  auto better_sequence = [&](NodeId u, EdgeId e, NodeId v) {
    chain(u, na, ea);
    na.push_back(v);
    ea.push_back(e);
    chain(v, nb, eb);
    if (na != nb) return na < nb;
    return ea < eb;
  };

  using Key = std::tuple<double, std::size_t, NodeId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> pq;
  dist[src] = 0.0;
  pq.emplace(0.0, 0, src);
  while (!pq.empty()) {
    const auto [d, h, u] = pq.top();
    pq.pop();
    if (done[u] || d != dist[u] || h != hops[u]) continue;
    done[u] = 1;
    if (u == dst) break;
    for (const Arc& arc : g.out_arcs(u)) {
      const NodeId v = arc.node;
      if (done[v] || (banned_nodes && (*banned_nodes)[v]) || !allowed(arc.edge)) continue;
      const double nd = d + weight(arc.edge);
      const std::size_t nh = h + 1;
      bool take = false;
      if (nd < dist[v] || (nd == dist[v] && nh < hops[v])) {
        take = true;
      } else if (nd == dist[v] && nh == hops[v] && via[v] != kNoEdge) {
        take = better_sequence(u, arc.edge, v);
      }
      if (take) {
        dist[v] = nd;
        hops[v] = nh;
        via[v] = arc.edge;
        pq.emplace(nd, nh, v);
      }
    }
  }
  if (dist[dst] == kInf) return std::nullopt;
  LeastCostPath out;
  out.cost = dist[dst];
  std::vector<NodeId> nodes;
  chain(dst, nodes, out.edges);
  return out;
}

}  // namespace

SolveResult solve_edijkstra(const GraphView& g, NodeId src, NodeId dst, const ConstraintSet& c) {
  check_endpoints(g, src, dst);
  c.validate(g.arity());
  if (c.path_count() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "edijkstra needs exactly one path bound, got " + std::to_string(c.path_count()));
  }
  const PathBound bound = c.path_bounds().front();
  for (EdgeId e = 0; e < g.graph().edge_count(); ++e) {
    if (g.path_metrics(e)[bound.metric] < 0.0) {
      throw Error(ErrorCode::kNegativeMetric,
                  "edijkstra requires non-negative path metric " + std::to_string(bound.metric));
    }
  }

  SolveResult result;
  const auto best = least_cost_path(
      g, src, dst, [&](EdgeId e) { return g.path_metrics(e)[bound.metric]; },
      [&](EdgeId e) { return links_satisfy(g.link_metrics(e), c); });
  if (!best) {
    result.status = SolveStatus::kUnreachable;
    return result;
  }
  PathResult path = make_path(g, src, best->edges);
  if (!c.within(path.accumulated.sums[bound.metric], bound.upper)) {
    result.status = SolveStatus::kInfeasible;
    return result;
  }
  result.status = SolveStatus::kOk;
  result.path = std::move(path);
  return result;
}

bool KShortestPaths::Candidate::operator<(const Candidate& o) const {
  if (cost != o.cost) return cost < o.cost;
  if (edges.size() != o.edges.size()) return edges.size() < o.edges.size();
  if (nodes != o.nodes) return nodes < o.nodes;
  return edges < o.edges;
}

KShortestPaths::KShortestPaths(const GraphView& g, NodeId src, NodeId dst, KspRanking ranking,
                               std::size_t metric)
    : g_(g), src_(src), dst_(dst), ranking_(ranking), metric_(metric) {
  check_endpoints(g, src, dst);
  if (ranking == KspRanking::kByPathMetric) {
    if (metric >= g.arity().path) {
      throw Error(ErrorCode::kArityMismatch, "ranking metric out of range");
    }
    for (EdgeId e = 0; e < g.graph().edge_count(); ++e) {
      if (g.path_metrics(e)[metric] < 0.0) {
        throw Error(ErrorCode::kNegativeMetric, "k-shortest ranking needs non-negative metric");
      }
    }
  }
}

double KShortestPaths::weight(EdgeId e) const {
  return ranking_ == KspRanking::kByHops ? 1.0 : g_.path_metrics(e)[metric_];
}

std::optional<KShortestPaths::Candidate> KShortestPaths::spur_search(
    NodeId from, const std::vector<char>& banned_nodes,
    const std::vector<char>& banned_edges) const {
  const auto found = least_cost_path(
      g_, from, dst_, [&](EdgeId e) { return weight(e); },
      [&](EdgeId e) { return !banned_edges[e]; }, &banned_nodes);
  if (!found) return std::nullopt;
  Candidate c{found->cost, {from}, found->edges};
  for (EdgeId e : found->edges) c.nodes.push_back(g_.target(e));
  return c;
}

std::optional<PathResult> KShortestPaths::next() {
  const std::size_t n = g_.node_count();
  if (!started_) {
    started_ = true;
    if (src_ == dst_) {
      accepted_.push_back({0.0, {src_}, {}});
      return make_path(g_, src_, {});
    }
    std::vector<char> no_nodes(n, 0);
    std::vector<char> no_edges(g_.graph().edge_count(), 0);
    auto first = spur_search(src_, no_nodes, no_edges);
    if (!first) return std::nullopt;
    accepted_.push_back(*first);
    return make_path(g_, src_, first->edges);
  }
  if (accepted_.empty() || accepted_.back().edges.empty()) return std::nullopt;

  const Candidate prev = accepted_.back();
  for (std::size_t i = 0; i + 1 < prev.nodes.size(); ++i) {
    const NodeId spur = prev.nodes[i];
    std::vector<char> banned_nodes(n, 0);
    std::vector<char> banned_edges(g_.graph().edge_count(), 0);
    for (std::size_t j = 0; j < i; ++j) banned_nodes[prev.nodes[j]] = 1;
    for (const Candidate& a : accepted_) {
      if (a.edges.size() > i && std::equal(a.edges.begin(), a.edges.begin() + i,
                                           prev.edges.begin())) {
        banned_edges[a.edges[i]] = 1;
      }
    }
    auto tail = spur_search(spur, banned_nodes, banned_edges);
    if (!tail) continue;

    Candidate total{0.0, {}, {}};
    total.nodes.assign(prev.nodes.begin(), prev.nodes.begin() + i);
    total.edges.assign(prev.edges.begin(), prev.edges.begin() + i);
    for (EdgeId e : total.edges) total.cost += weight(e);
    total.cost += tail->cost;
    total.nodes.insert(total.nodes.end(), tail->nodes.begin(), tail->nodes.end());
    total.edges.insert(total.edges.end(), tail->edges.begin(), tail->edges.end());

    if (std::find(accepted_.begin(), accepted_.end(), total) != accepted_.end()) continue;
    auto pos = std::lower_bound(pending_.begin(), pending_.end(), total);
    if (pos != pending_.end() && *pos == total) continue;
    pending_.insert(pos, std::move(total));
  }
  if (pending_.empty()) {
    accepted_.push_back({0.0, {src_}, {}});  // exhausted marker
    return std::nullopt;
  }
  accepted_.push_back(std::move(pending_.front()));
  pending_.erase(pending_.begin());
  return make_path(g_, src_, accepted_.back().edges);
}

SolveResult solve_ksp(const GraphView& candidates, const GraphView& check, NodeId src, NodeId dst,
                      const ConstraintSet& c, const KspConfig& cfg) {
  if (cfg.k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (&candidates.graph() != &check.graph()) {
    throw Error(ErrorCode::kInvalidArgument, "candidate and check views must share a graph");
  }
  c.validate(candidates.arity());
  SolveResult result;
  KShortestPaths ksp(candidates, src, dst, cfg.ranking, cfg.metric);
  for (std::size_t i = 0; i < cfg.k; ++i) {
    auto p = ksp.next();
    if (!p) {
      result.status = i == 0 ? SolveStatus::kUnreachable : SolveStatus::kInfeasible;
      return result;
    }
    PathResult checked = make_path(check, src, p->edges);
    if (links_satisfy(checked.min_link_metrics, c) && path_feasible(checked.accumulated, c)) {
      result.status = SolveStatus::kOk;
      result.path = std::move(checked);
      return result;
    }
  }
  result.status = SolveStatus::kInfeasible;
  return result;
}

SolveResult solve_exhaustive(const GraphView& g, NodeId src, NodeId dst, const ConstraintSet& c,
                             const ExhaustiveOptions& options) {
  check_endpoints(g, src, dst);
  c.validate(g.arity());
  SolveResult result;
  if (g.node_count() > options.max_nodes) {
    result.status = SolveStatus::kLimit;
    return result;
  }

  bool link_feasible_seen = false;
  std::optional<PathResult> best;
  std::vector<char> on_path(g.node_count(), 0);
  std::vector<EdgeId> stack;

  auto consider = [&]() {
    PathResult p = make_path(g, src, stack);
    if (!links_satisfy(p.min_link_metrics, c)) return;
    link_feasible_seen = true;
    if (!path_feasible(p.accumulated, c)) return;
    if (!best || p.hop_count() < best->hop_count() ||
        (p.hop_count() == best->hop_count() && lexicographic_less(p, *best))) {
      best = std::move(p);
    }
  };

  std::function<void(NodeId)> dfs = [&](NodeId u) {
    if (u == dst) {
      consider();
      return;
    }
    for (const Arc& arc : g.out_arcs(u)) {
      if (on_path[arc.node]) continue;
      on_path[arc.node] = 1;
      stack.push_back(arc.edge);
      dfs(arc.node);
      stack.pop_back();
      on_path[arc.node] = 0;
    }
  };
  on_path[src] = 1;
  dfs(src);

  if (best) {
    result.status = SolveStatus::kOk;
    result.path = std::move(*best);
  } else {
    result.status = link_feasible_seen ? SolveStatus::kInfeasible : SolveStatus::kUnreachable;
  }
  return result;
}

}  // namespace pathembed
