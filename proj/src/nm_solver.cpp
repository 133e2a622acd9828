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

#include "pathembed/nm_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>

#include "pathembed/error.hpp"

namespace pathembed {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_endpoints(const GraphView& g, NodeId src, NodeId dst) {
  if (src >= g.node_count() || dst >= g.node_count()) {
    throw Error(ErrorCode::kIndexOutOfRange, "source or destination out of range");
  }
}

PathResult zero_hop_path(const GraphView& g, NodeId src) { return make_path(g, src, {}); }

// Enumerates loop-free level-respecting paths that end at `dst`, walking
// from the deepest level back to level 0.
class BackwardWalker {
 public:
  BackwardWalker(const GraphView& g, const NeighborhoodList& nh, NodeId dst,
                 const ConstraintSet& c, bool prune_on_path_bounds, std::size_t* budget)
      : g_(g), nh_(nh), dst_(dst), c_(c), prune_(prune_on_path_bounds), budget_(budget) {
    const std::size_t n = g.node_count();
    member_.assign(nh.levels.size() * n, 0);
    for (std::size_t k = 0; k < nh.levels.size(); ++k) {
      for (NodeId v : nh.levels[k]) member_[k * n + v] = 1;
    }
    on_path_.assign(n, 0);
    arity_ = g.arity().path;
    sums_.assign((nh.levels.size() + 1) * arity_, 0.0);
  }

  // Calls visit(edges) with edges in source-to-destination order. Returns
  // false if the budget ran out.
  template <class Visit>
  bool run(Visit&& visit) {
    const std::size_t depth = nh_.levels.size() - 1;
    if (!member_[depth * g_.node_count() + dst_]) return true;
    stack_.clear();
    on_path_[dst_] = 1;
    const bool ok = descend(dst_, depth, visit);
    on_path_[dst_] = 0;
    return ok;
  }

 private:
  template <class Visit>
  bool descend(NodeId node, std::size_t pos, Visit& visit) {
    if (pos == 0) {
      std::vector<EdgeId> edges(stack_.rbegin(), stack_.rend());
      visit(edges);
      return true;
    }
    const std::size_t n = g_.node_count();
    const std::size_t below = pos - 1;
    const NodeId src = nh_.levels[0].front();
    for (const Arc& arc : g_.in_arcs(node)) {
      const NodeId m = arc.node;
      if (!member_[below * n + m] || on_path_[m]) continue;
      if (below > 0 && m == src) continue;
      if (!links_satisfy(g_.link_metrics(arc.edge), c_)) continue;

      const std::size_t depth_here = stack_.size();
      const double* prev = sums_.data() + depth_here * arity_;
      double* next = sums_.data() + (depth_here + 1) * arity_;
      const auto pm = g_.path_metrics(arc.edge);
      for (std::size_t i = 0; i < arity_; ++i) next[i] = prev[i] + pm[i];
      if (prune_) {
        bool viable = true;
        for (const PathBound& b : c_.path_bounds()) {
          if (!c_.within(next[b.metric], b.upper)) {
            viable = false;
            break;
          }
        }
        if (!viable) continue;
      }

      if (budget_) {
        if (*budget_ == 0) return false;
        --*budget_;
      }
      stack_.push_back(arc.edge);
      on_path_[m] = 1;
      const bool ok = descend(m, below, visit);
      on_path_[m] = 0;
      stack_.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  GraphView g_;
  const NeighborhoodList& nh_;
  NodeId dst_;
  const ConstraintSet& c_;
  bool prune_;
  std::size_t* budget_;
  std::size_t arity_ = 0;
  std::vector<char> member_;
  std::vector<char> on_path_;
  std::vector<EdgeId> stack_;
  std::vector<double> sums_;
};

// Label record of the single-bound forward pass. A node gets at most one
// record per level; `prev` points at the predecessor's record from the
// previous level, so back-tracking yields exactly `level` hops even after
// the predecessor has been relabeled deeper.
struct LabelRecord {
  NodeId node;
  std::size_t level;
  std::int64_t prev;
  EdgeId via;
  double dist;
};

}  // namespace

bool NeighborhoodList::contains(std::size_t level, NodeId n) const {
  if (level >= levels.size()) return false;
  return std::binary_search(levels[level].begin(), levels[level].end(), n);
}

SearchLabels init_labels(std::size_t node_count) {
  SearchLabels labels;
  labels.predecessor.assign(node_count, std::nullopt);
  labels.distance.assign(node_count, 0.0);
  labels.level.assign(node_count, std::nullopt);
  return labels;
}

bool extend_neighborhoods(const GraphView& g, NeighborhoodList& nh, const ConstraintSet& c) {
  const std::size_t n = g.node_count();
  if (nh.levels.empty() || nh.levels.size() >= n) return false;
  std::vector<char> seen(n, 0);
  std::vector<NodeId> next;
  for (NodeId u : nh.levels.back()) {
    for (const Arc& arc : g.out_arcs(u)) {
      if (seen[arc.node] || !links_satisfy(g.link_metrics(arc.edge), c)) continue;
      seen[arc.node] = 1;
      next.push_back(arc.node);
    }
  }
  if (next.empty()) return false;
  std::sort(next.begin(), next.end());
  const std::size_t k = nh.levels.size();
  for (NodeId v : next) nh.last_level[v] = k;
  nh.levels.push_back(std::move(next));
  return true;
}

std::optional<NeighborhoodList> build_neighborhoods(const GraphView& g, NodeId src, NodeId dst,
                                                    const ConstraintSet& c) {
  check_endpoints(g, src, dst);
  c.validate(g.arity());
  NeighborhoodList nh;
  nh.last_level.assign(g.node_count(), std::nullopt);
  nh.levels.push_back({src});
  nh.last_level[src] = 0;
  while (!nh.contains(nh.depth(), dst)) {
    if (!extend_neighborhoods(g, nh, c)) return std::nullopt;
  }
  return nh;
}

std::vector<PathResult> backward_pass(const GraphView& g, const NeighborhoodList& nh, NodeId dst,
                                      const ConstraintSet& link_filter) {
  if (nh.levels.empty() || !nh.contains(nh.depth(), dst)) {
    throw Error(ErrorCode::kInvalidArgument, "destination is not in the deepest neighborhood");
  }
  link_filter.validate({g.arity().link, std::size_t(-1)});
  const NodeId src = nh.levels[0].front();
  std::vector<PathResult> out;
  BackwardWalker walker(g, nh, dst, link_filter, /*prune_on_path_bounds=*/false, nullptr);
  walker.run([&](const std::vector<EdgeId>& edges) { out.push_back(make_path(g, src, edges)); });
  std::sort(out.begin(), out.end(), lexicographic_less);
  return out;
}

SolveResult solve_general(const GraphView& g, NodeId src, NodeId dst, const ConstraintSet& c,
                          const NmOptions& options) {
  check_endpoints(g, src, dst);
  c.validate(g.arity());
  SolveResult result;

  if (src == dst) {
    result.path = zero_hop_path(g, src);
    result.status = path_feasible(result.path.accumulated, c) ? SolveStatus::kOk
                                                              : SolveStatus::kInfeasible;
    if (!result.ok()) result.path = {};
    return result;
  }

  auto nh = build_neighborhoods(g, src, dst, c);
  if (!nh) {
    result.status = SolveStatus::kUnreachable;
    return result;
  }

  const bool prune = g.graph().path_metrics_nonnegative();
  std::size_t budget = options.candidate_limit;
  for (;;) {
    std::optional<PathResult> best;
    BackwardWalker walker(g, *nh, dst, c, prune, &budget);
    const bool finished = walker.run([&](const std::vector<EdgeId>& edges) {
      PathResult candidate = make_path(g, src, edges);
      if (!path_feasible(candidate.accumulated, c)) return;
      if (!best || lexicographic_less(candidate, *best)) best = std::move(candidate);
    });
    if (!finished) {
      result.status = SolveStatus::kLimit;
      return result;
    }
    if (best) {
      result.status = SolveStatus::kOk;
      result.path = std::move(*best);
      return result;
    }
    if (!extend_neighborhoods(g, *nh, c)) {
      result.status = SolveStatus::kInfeasible;
      return result;
    }
  }
}

bool link_reachable(const GraphView& g, NodeId src, NodeId dst, const ConstraintSet& c) {
  check_endpoints(g, src, dst);
  std::vector<char> seen(g.node_count(), 0);
  std::deque<NodeId> queue{src};
  seen[src] = 1;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    if (u == dst) return true;
    for (const Arc& arc : g.out_arcs(u)) {
      if (seen[arc.node] || !links_satisfy(g.link_metrics(arc.edge), c)) continue;
      seen[arc.node] = 1;
      queue.push_back(arc.node);
    }
  }
  return false;
}

SolveResult solve_l1(const GraphView& g, NodeId src, NodeId dst, const ConstraintSet& c,
                     L1Trace* trace) {
  check_endpoints(g, src, dst);
  c.validate(g.arity());
  if (c.path_count() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "solve_l1 needs exactly one path bound, got " + std::to_string(c.path_count()));
  }
  const PathBound bound = c.path_bounds().front();
  const std::size_t n = g.node_count();

  // Pre-routing: per-node state. Pruned edges are skipped during relaxation.
  SearchLabels labels = init_labels(n);
  NeighborhoodList nh;
  nh.last_level.assign(n, std::nullopt);
  std::vector<LabelRecord> records;
  std::vector<std::int64_t> current(n, -1);

  records.push_back({src, 0, -1, 0, 0.0});
  current[src] = 0;
  labels.level[src] = 0;
  nh.levels.push_back({src});
  nh.last_level[src] = 0;

  SolveResult result;
  auto finish = [&](SolveStatus status) {
    result.status = status;
    if (trace) {
      trace->neighborhoods = nh;
      trace->labels = labels;
    }
    return result;
  };

  if (src == dst) {
    if (!c.within(0.0, bound.upper)) return finish(SolveStatus::kInfeasible);
    result.path = zero_hop_path(g, src);
    return finish(SolveStatus::kOk);
  }

  std::vector<std::int64_t> frontier{0};
  std::vector<std::int64_t> this_round(n, -1);
  while (!nh.contains(nh.depth(), dst)) {
    const std::size_t k = nh.levels.size();
    std::vector<NodeId> level;
    std::vector<std::int64_t> next_frontier;

    for (const std::int64_t rec_idx : frontier) {
      const NodeId u = records[rec_idx].node;
      const double du = records[rec_idx].dist;
      for (const Arc& arc : g.out_arcs(u)) {
        if (!links_satisfy(g.link_metrics(arc.edge), c)) continue;
        const NodeId v = arc.node;
        const double dist = du + g.path_metrics(arc.edge)[bound.metric];
        if (!c.within(dist, bound.upper)) continue;
        const double dv = current[v] >= 0 ? records[current[v]].dist : kInf;
        if (!(dist < dv)) continue;

        if (this_round[v] >= 0) {
          LabelRecord& r = records[this_round[v]];
          r.prev = rec_idx;
          r.via = arc.edge;
          r.dist = dist;
        } else {
          if (const auto old = nh.last_level[v]) {
            auto& prior = nh.levels[*old];
            prior.erase(std::find(prior.begin(), prior.end(), v));
          }
          records.push_back({v, k, rec_idx, arc.edge, dist});
          this_round[v] = static_cast<std::int64_t>(records.size() - 1);
          current[v] = this_round[v];
          nh.last_level[v] = k;
          level.push_back(v);
          next_frontier.push_back(this_round[v]);
        }
        labels.predecessor[v] = u;
        labels.distance[v] = dist;
        labels.level[v] = k;
      }
    }

    for (NodeId v : level) this_round[v] = -1;
    if (level.empty()) {
      return finish(link_reachable(g, src, dst, c) ? SolveStatus::kInfeasible
                                                   : SolveStatus::kUnreachable);
    }
    if (nh.levels.size() >= n) return finish(SolveStatus::kNegativeCycle);

    std::sort(level.begin(), level.end());
    std::sort(next_frontier.begin(), next_frontier.end(),
              [&](std::int64_t a, std::int64_t b) { return records[a].node < records[b].node; });
    nh.levels.push_back(std::move(level));
    frontier = std::move(next_frontier);
  }

  // Back track along the record chain.
  std::vector<EdgeId> edges;
  std::vector<char> seen(n, 0);
  seen[dst] = 1;
  for (std::int64_t r = current[dst]; records[r].prev >= 0; r = records[r].prev) {
    edges.push_back(records[r].via);
    const NodeId pred = records[records[r].prev].node;
    if (seen[pred]) return finish(SolveStatus::kNegativeCycle);
    seen[pred] = 1;
  }
  std::reverse(edges.begin(), edges.end());
  result.path = make_path(g, src, edges);
  return finish(SolveStatus::kOk);
}

}  // namespace pathembed
