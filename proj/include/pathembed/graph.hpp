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

/// @file graph.hpp
/// Directed substrate graph with per-edge link (concave) and path (additive)
/// metrics, plus a read-only view type that lets solvers see residual link
/// metrics without copying the graph.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pathembed {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Per-edge metric vectors. Link metrics are checked edge by edge against
/// lower bounds (bandwidth); path metrics are summed along a path (delay).
struct EdgeMetrics {
  std::vector<double> link;
  std::vector<double> path;

  bool operator==(const EdgeMetrics&) const = default;
};

struct EdgeSpec {
  NodeId src = 0;
  NodeId dst = 0;
  EdgeMetrics metrics;
};

/// Adjacency entry: the node at the other end and the edge handle.
struct Arc {
  NodeId node = 0;
  EdgeId edge = 0;

  bool operator==(const Arc&) const = default;
};

struct MetricArity {
  std::size_t link = 0;
  std::size_t path = 0;

  bool operator==(const MetricArity&) const = default;
};

/// Immutable directed multigraph. Edge handles are the positions of the
/// edges in the construction list. Out- and in-adjacency lists are sorted
/// by (neighbor id, edge handle), so iteration order is a pure function of
/// the edge list.
class PhysicalGraph {
 public:
  PhysicalGraph() = default;

  std::size_t node_count() const noexcept { return out_.size(); }
  std::size_t edge_count() const noexcept { return src_.size(); }
  MetricArity arity() const noexcept { return arity_; }

  NodeId source(EdgeId e) const { return src_[e]; }
  NodeId target(EdgeId e) const { return dst_[e]; }

  std::span<const double> link_metrics(EdgeId e) const {
    return {link_.data() + static_cast<std::size_t>(e) * arity_.link, arity_.link};
  }
  std::span<const double> path_metrics(EdgeId e) const {
    return {path_.data() + static_cast<std::size_t>(e) * arity_.path, arity_.path};
  }
  EdgeMetrics metrics(EdgeId e) const;

  std::span<const Arc> out_arcs(NodeId u) const { return out_[u]; }
  std::span<const Arc> in_arcs(NodeId v) const { return in_[v]; }

  double node_capacity(NodeId u) const { return capacity_[u]; }
  std::span<const double> node_capacities() const { return capacity_; }

  /// Flat edge-major link metric storage (edge_count * arity().link).
  std::span<const double> link_metric_table() const { return link_; }

  /// True when every path metric of every edge is >= 0.
  bool path_metrics_nonnegative() const noexcept { return nonnegative_paths_; }

  /// Largest value of path metric `index` over all edges, if any edge exists.
  std::optional<double> max_path_metric(std::size_t index) const;

  bool operator==(const PhysicalGraph&) const = default;

 private:
  friend PhysicalGraph build_graph(std::size_t, std::span<const EdgeSpec>,
                                   std::vector<double>,
                                   std::optional<MetricArity>);

  MetricArity arity_;
  std::vector<NodeId> src_;
  std::vector<NodeId> dst_;
  std::vector<double> link_;
  std::vector<double> path_;
  std::vector<double> capacity_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  bool nonnegative_paths_ = true;
};

/// Builds a graph. When `arity` is not given it is taken from the first
/// edge (or 0/0 for an edgeless graph). An empty `node_capacity` means all
/// capacities are zero.
///
/// Throws Error with kIndexOutOfRange, kSelfLoop or kArityMismatch.
PhysicalGraph build_graph(std::size_t node_count, std::span<const EdgeSpec> edges,
                          std::vector<double> node_capacity = {},
                          std::optional<MetricArity> arity = std::nullopt);

/// Read-only view over a graph whose link metrics may be replaced by an
/// overlay table (same layout as PhysicalGraph::link_metric_table()).
class GraphView {
 public:
  // NOLINTNEXTLINE(google-explicit-constructor)
  GraphView(const PhysicalGraph& g) : graph_(&g) {}
  GraphView(const PhysicalGraph& g, std::span<const double> link_override)
      : graph_(&g), override_(link_override) {}

  const PhysicalGraph& graph() const noexcept { return *graph_; }
  std::size_t node_count() const noexcept { return graph_->node_count(); }
  MetricArity arity() const noexcept { return graph_->arity(); }

  std::span<const double> link_metrics(EdgeId e) const {
    if (override_.empty()) return graph_->link_metrics(e);
    const std::size_t l = graph_->arity().link;
    return override_.subspan(static_cast<std::size_t>(e) * l, l);
  }
  std::span<const double> path_metrics(EdgeId e) const {
    return graph_->path_metrics(e);
  }
  std::span<const Arc> out_arcs(NodeId u) const { return graph_->out_arcs(u); }
  std::span<const Arc> in_arcs(NodeId v) const { return graph_->in_arcs(v); }
  NodeId source(EdgeId e) const { return graph_->source(e); }
  NodeId target(EdgeId e) const { return graph_->target(e); }

 private:
  const PhysicalGraph* graph_;
  std::span<const double> override_;
};

}  // namespace pathembed
