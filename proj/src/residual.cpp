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

#include "pathembed/residual.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pathembed/error.hpp"
#include "pathembed/text.hpp"

namespace pathembed {

namespace {

constexpr double kScale = 4294967296.0;  // 2^32
constexpr double kMaxUnits = 9.0e18;

std::int64_t to_units(double demand) {
  if (!(demand >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "demand must be non-negative, got " + format_number(demand));
  }
  const double units = std::floor(demand * kScale);
  if (units > kMaxUnits) {
    throw Error(ErrorCode::kInvalidArgument, "demand " + format_number(demand) + " too large");
  }
  return static_cast<std::int64_t>(units);
}

double from_units(std::int64_t units) { return static_cast<double>(units) / kScale; }

// Edges may repeat in the input; headroom is checked against the total.
std::map<EdgeId, std::int64_t> edge_multiplicity(std::span<const EdgeId> edges) {
  std::map<EdgeId, std::int64_t> out;
  for (EdgeId e : edges) ++out[e];
  return out;
}

}  // namespace

ResidualOverlay::ResidualOverlay(const PhysicalGraph& base)
    : base_(&base),
      reserved_(base.link_metric_table().size(), 0),
      residual_(base.link_metric_table().begin(), base.link_metric_table().end()),
      node_reserved_(base.node_count(), 0),
      node_residual_(base.node_capacities().begin(), base.node_capacities().end()) {}

double ResidualOverlay::reserved_link(EdgeId e, std::size_t metric) const {
  return from_units(reserved_[static_cast<std::size_t>(e) * base_->arity().link + metric]);
}

void ResidualOverlay::refresh_edge(EdgeId e) {
  const std::size_t l = base_->arity().link;
  const auto base = base_->link_metrics(e);
  for (std::size_t i = 0; i < l; ++i) {
    residual_[e * l + i] = base[i] - from_units(reserved_[e * l + i]);
  }
}

void ResidualOverlay::reserve(std::span<const EdgeId> edges,
                              std::span<const double> link_demand) {
  const std::size_t l = base_->arity().link;
  if (link_demand.size() != l) {
    throw Error(ErrorCode::kArityMismatch, "demand arity does not match the graph");
  }
  std::vector<std::int64_t> units(l);
  for (std::size_t i = 0; i < l; ++i) units[i] = to_units(link_demand[i]);

  const auto mult = edge_multiplicity(edges);
  for (const auto& [e, count] : mult) {
    if (e >= base_->edge_count()) {
      throw Error(ErrorCode::kIndexOutOfRange, "edge " + std::to_string(e) + " out of range");
    }
    const auto base = base_->link_metrics(e);
    for (std::size_t i = 0; i < l; ++i) {
      const double residual = residual_[e * l + i];
      const double need = link_demand[i] * static_cast<double>(count);
      const double after = base[i] - from_units(reserved_[e * l + i] + units[i] * count);
      if (residual < need || after < 0.0) {
        throw Error(ErrorCode::kInsufficientResidual,
                    "edge " + std::to_string(e) + " metric " + std::to_string(i) + " has " +
                        format_number(residual) + " left, needs " + format_number(need));
      }
    }
  }
  for (const auto& [e, count] : mult) {
    for (std::size_t i = 0; i < l; ++i) reserved_[e * l + i] += units[i] * count;
    refresh_edge(e);
  }
}

void ResidualOverlay::release(std::span<const EdgeId> edges,
                              std::span<const double> link_demand) {
  const std::size_t l = base_->arity().link;
  if (link_demand.size() != l) {
    throw Error(ErrorCode::kArityMismatch, "demand arity does not match the graph");
  }
  std::vector<std::int64_t> units(l);
  for (std::size_t i = 0; i < l; ++i) units[i] = to_units(link_demand[i]);

  const auto mult = edge_multiplicity(edges);
  for (const auto& [e, count] : mult) {
    if (e >= base_->edge_count()) {
      throw Error(ErrorCode::kIndexOutOfRange, "edge " + std::to_string(e) + " out of range");
    }
    for (std::size_t i = 0; i < l; ++i) {
      if (reserved_[e * l + i] < units[i] * count) {
        throw Error(ErrorCode::kOverRelease, "release on edge " + std::to_string(e) +
                                                 " would exceed its base capacity");
      }
    }
  }
  for (const auto& [e, count] : mult) {
    for (std::size_t i = 0; i < l; ++i) reserved_[e * l + i] -= units[i] * count;
    refresh_edge(e);
  }
}

void ResidualOverlay::reserve_node(NodeId n, double demand) {
  if (n >= base_->node_count()) {
    throw Error(ErrorCode::kIndexOutOfRange, "node " + std::to_string(n) + " out of range");
  }
  const std::int64_t u = to_units(demand);
  const double after = base_->node_capacity(n) - from_units(node_reserved_[n] + u);
  if (node_residual_[n] < demand || after < 0.0) {
    throw Error(ErrorCode::kInsufficientResidual,
                "node " + std::to_string(n) + " lacks capacity for " + format_number(demand));
  }
  node_reserved_[n] += u;
  node_residual_[n] = after;
}

void ResidualOverlay::release_node(NodeId n, double demand) {
  if (n >= base_->node_count()) {
    throw Error(ErrorCode::kIndexOutOfRange, "node " + std::to_string(n) + " out of range");
  }
  const std::int64_t u = to_units(demand);
  if (node_reserved_[n] < u) {
    throw Error(ErrorCode::kOverRelease,
                "release on node " + std::to_string(n) + " would exceed its capacity");
  }
  node_reserved_[n] -= u;
  node_residual_[n] = base_->node_capacity(n) - from_units(node_reserved_[n]);
}

void reserve(ResidualOverlay& overlay, const PathResult& path, const EdgeMetrics& demand) {
  overlay.reserve(path.edges, demand.link);
}

void release(ResidualOverlay& overlay, const PathResult& path, const EdgeMetrics& demand) {
  overlay.release(path.edges, demand.link);
}

}  // namespace pathembed
