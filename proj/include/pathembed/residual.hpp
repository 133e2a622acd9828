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

/// @file residual.hpp
/// Residual link metrics and node capacities layered over an immutable graph.
///
/// Reserved amounts are kept as integer multiples of 2^-32 so that any
/// reserve/release pair restores the overlay bit for bit. A demand d is
/// booked as floor(d * 2^32) units, so bookkeeping can be generous by less
/// than 2^-32 per reservation but never lets a residual drop below zero.
///
/// Single writer: concurrent reserve/release calls must be serialized by the
/// caller, and views must not be read while a write is in progress.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pathembed/graph.hpp"
#include "pathembed/path.hpp"

namespace pathembed {

class ResidualOverlay {
 public:
  explicit ResidualOverlay(const PhysicalGraph& base);

  const PhysicalGraph& base() const noexcept { return *base_; }

  /// View whose link metrics are the current residuals.
  GraphView view() const { return GraphView(*base_, residual_); }

  std::span<const double> residual_link_metrics(EdgeId e) const {
    const std::size_t l = base_->arity().link;
    return {residual_.data() + static_cast<std::size_t>(e) * l, l};
  }
  double residual_node_capacity(NodeId n) const { return node_residual_[n]; }

  /// Amount currently booked against link metric `metric` of edge `e`.
  double reserved_link(EdgeId e, std::size_t metric) const;

  /// Decrements the residual link metrics of every edge by `link_demand`.
  /// All-or-nothing: throws Error(kInsufficientResidual) without touching
  /// the overlay if any edge lacks headroom.
  void reserve(std::span<const EdgeId> edges, std::span<const double> link_demand);

  /// Inverse of reserve. Throws Error(kOverRelease) without mutation if any
  /// residual would exceed its base value. Provenance is not tracked.
  void release(std::span<const EdgeId> edges, std::span<const double> link_demand);

  void reserve_node(NodeId n, double demand);
  void release_node(NodeId n, double demand);

  bool operator==(const ResidualOverlay& o) const {
    return base_ == o.base_ && reserved_ == o.reserved_ && node_reserved_ == o.node_reserved_;
  }

 private:
  void refresh_edge(EdgeId e);

  const PhysicalGraph* base_;
  std::vector<std::int64_t> reserved_;
  std::vector<double> residual_;
  std::vector<std::int64_t> node_reserved_;
  std::vector<double> node_residual_;
};

/// Reserves `demand.link` along `path`. Path metrics of `demand` are ignored.
void reserve(ResidualOverlay& overlay, const PathResult& path, const EdgeMetrics& demand);
void release(ResidualOverlay& overlay, const PathResult& path, const EdgeMetrics& demand);

}  // namespace pathembed
