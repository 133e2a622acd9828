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

#include "pathembed/harness.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pathembed/error.hpp"
#include "pathembed/residual.hpp"
#include "pathembed/rng.hpp"
#include "pathembed/text.hpp"

namespace pathembed {

namespace {

std::vector<double> link_demand(const PhysicalGraph& g, double bw) {
  std::vector<double> d(g.arity().link, 0.0);
  if (!d.empty()) d[0] = bw;
  return d;
}

std::vector<double> residual_column(const ResidualOverlay& overlay) {
  const PhysicalGraph& g = overlay.base();
  std::vector<double> out(g.edge_count(), 0.0);
  if (g.arity().link == 0) return out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) out[e] = overlay.residual_link_metrics(e)[0];
  return out;
}

// Placement and routing of one request, rolled back unless committed.
class PendingRequest {
 public:
  explicit PendingRequest(ResidualOverlay& overlay) : overlay_(overlay) {}
  PendingRequest(const PendingRequest&) = delete;
  PendingRequest& operator=(const PendingRequest&) = delete;

  ~PendingRequest() {
    if (committed_) return;
    for (auto it = links_.rbegin(); it != links_.rend(); ++it) {
      overlay_.release(it->edges, link_demand(overlay_.base(), it->bw));
    }
    for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
      overlay_.release_node(it->first, it->second);
    }
  }

  void place(NodeId host, double cpu) {
    overlay_.reserve_node(host, cpu);
    nodes_.emplace_back(host, cpu);
  }

  void route(const PathResult& path, double bw) {
    overlay_.reserve(path.edges, link_demand(overlay_.base(), bw));
    links_.push_back({path.nodes, path.edges, bw});
  }

  std::vector<Allocation> commit() {
    committed_ = true;
    return std::move(links_);
  }

 private:
  ResidualOverlay& overlay_;
  std::vector<std::pair<NodeId, double>> nodes_;
  std::vector<Allocation> links_;
  bool committed_ = false;
};

}  // namespace

void VnRequest::validate() const {
  for (double c : cpu) {
    if (!(c > 0.0)) throw Error(ErrorCode::kInvalidArgument, "virtual node demand must be > 0");
  }
  for (const VirtualLink& l : links) {
    if (l.a >= cpu.size() || l.b >= cpu.size() || l.a == l.b) {
      throw Error(ErrorCode::kInvalidArgument, "virtual link endpoints invalid");
    }
    if (!(l.bw > 0.0)) throw Error(ErrorCode::kInvalidArgument, "virtual link demand must be > 0");
    if (l.delay_bound && !(*l.delay_bound > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "virtual link delay bound must be > 0");
    }
  }
}

double energy_efficiency(std::size_t n, std::size_t n_used, double bw_total) {
  if (n == 0 || n_used > n) {
    throw Error(ErrorCode::kInvalidCounts, "need N > 0 and 0 <= N_used <= N, got N=" +
                                               std::to_string(n) +
                                               " N_used=" + std::to_string(n_used));
  }
  return static_cast<double>(n - n_used) / static_cast<double>(n) * bw_total;
}

std::vector<VnRequest> generate_vn_requests(std::size_t count, std::size_t nodes,
                                            double max_demand, std::uint64_t seed) {
  if (nodes < 2 || !(max_demand >= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "virtual networks need >= 2 nodes and demand >= 1");
  }
  Rng rng(derive_seed(seed, 11));
  std::vector<VnRequest> out(count);
  for (VnRequest& req : out) {
    req.cpu.resize(nodes);
    for (double& c : req.cpu) c = rng.uniform(1.0, max_demand);
    std::vector<std::size_t> order(nodes);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = nodes - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
    std::set<std::pair<std::size_t, std::size_t>> chain;
    for (std::size_t i = 0; i + 1 < nodes; ++i) {
      const auto a = std::min(order[i], order[i + 1]);
      const auto b = std::max(order[i], order[i + 1]);
      chain.emplace(a, b);
    }
    const double density = rng.uniform();
    for (std::size_t a = 0; a < nodes; ++a) {
      for (std::size_t b = a + 1; b < nodes; ++b) {
        const bool in_chain = chain.count({a, b}) > 0;
        const bool extra = rng.chance(density);
        if (in_chain || extra) req.links.push_back({a, b, rng.uniform(1.0, max_demand), {}});
      }
    }
  }
  return out;
}

VneReport run_vne(const PhysicalGraph& g, const std::vector<VnRequest>& requests,
                  std::string_view backend_name) {
  const Backend backend = parse_backend(backend_name);
  ResidualOverlay overlay(g);
  const GraphView base(g);
  VneReport report;
  report.requested_vns = requests.size();

  for (const VnRequest& req : requests) {
    req.validate();
    RequestOutcome outcome;
    outcome.links_requested = req.links.size();
    report.requested_links += req.links.size();

    PendingRequest pending(overlay);
    std::vector<char> used(g.node_count(), 0);
    bool ok = true;
    for (double cpu : req.cpu) {
      std::optional<NodeId> host;
      for (NodeId u = 0; u < g.node_count(); ++u) {
        if (used[u] || overlay.residual_node_capacity(u) < cpu) continue;
        if (!host || overlay.residual_node_capacity(u) > overlay.residual_node_capacity(*host)) {
          host = u;
        }
      }
      if (!host) {
        ok = false;
        outcome.reason = "no physical node fits a virtual node";
        break;
      }
      used[*host] = 1;
      pending.place(*host, cpu);
      outcome.placement.push_back(*host);
    }

    for (std::size_t i = 0; ok && i < req.links.size(); ++i) {
      const VirtualLink& vl = req.links[i];
      std::vector<PathBound> paths;
      if (vl.delay_bound) paths.push_back({0, *vl.delay_bound});
      const ConstraintSet c({{0, vl.bw}}, std::move(paths));
      const NodeId src = outcome.placement[vl.a];
      const NodeId dst = outcome.placement[vl.b];
      const SolveResult r = run_backend(backend, overlay.view(), base, src, dst, c);
      if (!r.ok()) {
        ok = false;
        outcome.reason = "virtual link " + std::to_string(i) + ": " + std::string(to_string(r.status));
        break;
      }
      pending.route(r.path, vl.bw);
    }

    if (ok) {
      auto links = pending.commit();
      report.allocations.insert(report.allocations.end(), std::make_move_iterator(links.begin()),
                                std::make_move_iterator(links.end()));
      outcome.accepted = true;
      ++report.accepted_vns;
      report.accepted_links += req.links.size();
    } else {
      outcome.placement.clear();
    }
    report.per_request.push_back(std::move(outcome));
  }

  if (report.requested_vns > 0) {
    report.vn_allocation_ratio =
        static_cast<double>(report.accepted_vns) / static_cast<double>(report.requested_vns);
  }
  if (report.requested_links > 0) {
    report.link_allocation_ratio =
        static_cast<double>(report.accepted_links) / static_cast<double>(report.requested_links);
  }
  double base_total = 0.0;
  double used_total = 0.0;
  if (g.arity().link > 0) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      base_total += g.link_metrics(e)[0];
      used_total += overlay.reserved_link(e, 0);
    }
  }
  report.link_utilization = base_total > 0.0 ? used_total / base_total : 0.0;
  report.final_residual = residual_column(overlay);
  return report;
}

std::vector<std::pair<NodeId, NodeId>> draw_pairs(std::size_t node_count, std::size_t pairs,
                                                  std::uint64_t seed) {
  if (node_count < 2 || pairs > node_count * (node_count - 1)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot draw " + std::to_string(pairs) +
                                                 " distinct pairs from " +
                                                 std::to_string(node_count) + " nodes");
  }
  Rng rng(derive_seed(seed, 7));
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(pairs);
  while (out.size() < pairs) {
    const auto s = static_cast<NodeId>(rng.below(node_count));
    const auto d = static_cast<NodeId>(rng.below(node_count));
    if (s == d || !seen.emplace(s, d).second) continue;
    out.emplace_back(s, d);
  }
  return out;
}

namespace {

double steering_demand(const ConstraintSet& c) {
  for (const LinkBound& b : c.link_bounds()) {
    if (b.metric == 0 && b.lower > 0.0) return b.lower;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "steering needs a positive bandwidth bound on link metric 0");
}

void summarize(SteeringReport& r, const std::vector<char>& used, double total_micros) {
  r.n_used = static_cast<std::size_t>(std::count(used.begin(), used.end(), 1));
  r.energy_efficiency = energy_efficiency(used.size(), r.n_used, r.total_throughput);
  std::size_t hops = 0;
  for (const Allocation& a : r.allocations) hops += a.edges.size();
  r.avg_path_length = r.allocations.empty() ? 0.0
                                            : static_cast<double>(hops) /
                                                  static_cast<double>(r.allocations.size());
  r.avg_time_per_vl =
      r.solver_calls == 0 ? 0.0 : total_micros / static_cast<double>(r.solver_calls);
}

}  // namespace

SteeringReport run_steering(const PhysicalGraph& g, std::size_t pairs, const ConstraintSet& c,
                            std::string_view backend_name, std::uint64_t seed) {
  parse_backend(backend_name);
  steering_demand(c);
  return run_steering(g, draw_pairs(g.node_count(), pairs, seed), c, backend_name);
}

SteeringReport run_steering(const PhysicalGraph& g,
                            const std::vector<std::pair<NodeId, NodeId>>& endpoints,
                            const ConstraintSet& c, std::string_view backend_name) {
  const Backend backend = parse_backend(backend_name);
  const double demand = steering_demand(c);
  const auto demand_vec = link_demand(g, demand);

  ResidualOverlay overlay(g);
  const GraphView base(g);
  SteeringReport report;
  std::vector<char> used(g.node_count(), 0);
  double total_micros = 0.0;
  for (const auto& [src, dst] : endpoints) {
    for (;;) {
      const SolveResult r = run_backend(backend, overlay.view(), base, src, dst, c);
      ++report.solver_calls;
      total_micros += r.micros;
      if (!r.ok()) break;
      overlay.reserve(r.path.edges, demand_vec);
      for (NodeId n : r.path.nodes) used[n] = 1;
      report.total_throughput += demand;
      report.allocations.push_back({r.path.nodes, r.path.edges, demand});
    }
  }
  report.vl_count = report.allocations.size();
  summarize(report, used, total_micros);
  report.final_residual = residual_column(overlay);
  return report;
}

SteeringReport run_queries(const PhysicalGraph& g, std::size_t pairs, const ConstraintSet& c,
                           std::string_view backend_name, std::uint64_t seed) {
  const Backend backend = parse_backend(backend_name);
  const auto endpoints = draw_pairs(g.node_count(), pairs, seed);
  SteeringReport report;
  std::vector<char> used(g.node_count(), 0);
  double total_micros = 0.0;
  for (const auto& [src, dst] : endpoints) {
    const SolveResult r = run_backend(backend, g, src, dst, c);
    ++report.solver_calls;
    total_micros += r.micros;
    if (!r.ok()) continue;
    for (NodeId n : r.path.nodes) used[n] = 1;
    report.allocations.push_back({r.path.nodes, r.path.edges, 0.0});
  }
  report.vl_count = report.allocations.size();
  summarize(report, used, total_micros);
  return report;
}

}  // namespace pathembed
