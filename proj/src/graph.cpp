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

#include "pathembed/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pathembed/error.hpp"

namespace pathembed {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kInsufficientResidual: return "InsufficientResidual";
    case ErrorCode::kOverRelease: return "OverRelease";
    case ErrorCode::kNonPositiveValue: return "NonPositiveValue";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNegativeMetric: return "NegativeMetric";
    case ErrorCode::kDegreeUnreachable: return "DegreeUnreachable";
    case ErrorCode::kInvalidCounts: return "InvalidCounts";
    case ErrorCode::kUnknownBackend: return "UnknownBackend";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

EdgeMetrics PhysicalGraph::metrics(EdgeId e) const {
  auto l = link_metrics(e);
  auto p = path_metrics(e);
  return {{l.begin(), l.end()}, {p.begin(), p.end()}};
}

std::optional<double> PhysicalGraph::max_path_metric(std::size_t index) const {
  if (index >= arity_.path || src_.empty()) return std::nullopt;
  double best = path_metrics(0)[index];
  for (EdgeId e = 1; e < src_.size(); ++e) best = std::max(best, path_metrics(e)[index]);
  return best;
}

PhysicalGraph build_graph(std::size_t node_count, std::span<const EdgeSpec> edges,
                          std::vector<double> node_capacity,
                          std::optional<MetricArity> arity) {
  MetricArity a{};
  if (arity) {
    a = *arity;
  } else if (!edges.empty()) {
    a = {edges.front().metrics.link.size(), edges.front().metrics.path.size()};
  }
  if (node_capacity.empty()) node_capacity.assign(node_count, 0.0);
  if (node_capacity.size() != node_count) {
    throw Error(ErrorCode::kArityMismatch,
                "node capacity list has " + std::to_string(node_capacity.size()) +
                    " entries for " + std::to_string(node_count) + " nodes");
  }

  PhysicalGraph g;
  g.arity_ = a;
  g.capacity_ = std::move(node_capacity);
  g.out_.resize(node_count);
  g.in_.resize(node_count);
  g.src_.reserve(edges.size());
  g.dst_.reserve(edges.size());
  g.link_.reserve(edges.size() * a.link);
  g.path_.reserve(edges.size() * a.path);

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& e = edges[i];
    if (e.src >= node_count || e.dst >= node_count) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge " + std::to_string(i) + " endpoint out of range (" +
                      std::to_string(e.src) + " -> " + std::to_string(e.dst) + ")");
    }
    if (e.src == e.dst) {
      throw Error(ErrorCode::kSelfLoop, "edge " + std::to_string(i) + " is a self-loop on node " +
                                            std::to_string(e.src));
    }
    if (e.metrics.link.size() != a.link || e.metrics.path.size() != a.path) {
      throw Error(ErrorCode::kArityMismatch, "edge " + std::to_string(i) +
                                                 " metric arity does not match the graph");
    }
    const auto id = static_cast<EdgeId>(i);
    g.src_.push_back(e.src);
    g.dst_.push_back(e.dst);
    g.link_.insert(g.link_.end(), e.metrics.link.begin(), e.metrics.link.end());
    g.path_.insert(g.path_.end(), e.metrics.path.begin(), e.metrics.path.end());
    for (double v : e.metrics.path) {
      if (v < 0.0) g.nonnegative_paths_ = false;
    }
    g.out_[e.src].push_back({e.dst, id});
    g.in_[e.dst].push_back({e.src, id});
  }

  auto by_node_then_edge = [](const Arc& x, const Arc& y) {
    return x.node != y.node ? x.node < y.node : x.edge < y.edge;
  };
  for (auto& arcs : g.out_) std::sort(arcs.begin(), arcs.end(), by_node_then_edge);
  for (auto& arcs : g.in_) std::sort(arcs.begin(), arcs.end(), by_node_then_edge);
  return g;
}

}  // namespace pathembed
