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

/// @file constraints.hpp
/// SLO constraint sets: lower bounds on link metrics (checked per edge) and
/// upper bounds on accumulated path metrics (checked on the sum).

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathembed/graph.hpp"

namespace pathembed {

/// Link metric `metric` must be >= `lower` on every traversed edge.
struct LinkBound {
  std::size_t metric = 0;
  double lower = 0.0;

  bool operator==(const LinkBound&) const = default;
};

/// Sum of path metric `metric` along the path must be < `upper`
/// (or <= in non-strict mode).
struct PathBound {
  std::size_t metric = 0;
  double upper = 0.0;

  bool operator==(const PathBound&) const = default;
};

enum class BoundMode { kStrict, kNonStrict };

class ConstraintSet {
 public:
  ConstraintSet() = default;

  /// Throws Error(kInvalidArgument) on a duplicate metric index within a
  /// bound class.
  ConstraintSet(std::vector<LinkBound> link_bounds, std::vector<PathBound> path_bounds,
                BoundMode mode = BoundMode::kStrict);

  const std::vector<LinkBound>& link_bounds() const noexcept { return link_; }
  const std::vector<PathBound>& path_bounds() const noexcept { return path_; }
  BoundMode mode() const noexcept { return mode_; }

  std::size_t link_count() const noexcept { return link_.size(); }
  std::size_t path_count() const noexcept { return path_.size(); }

  /// Throws Error(kArityMismatch) if any bound names a metric outside the
  /// given arity.
  void validate(MetricArity arity) const;

  /// True when `sum` satisfies a bound of `upper` under this set's mode.
  bool within(double sum, double upper) const noexcept {
    return mode_ == BoundMode::kStrict ? sum < upper : sum <= upper;
  }

  bool operator==(const ConstraintSet&) const = default;

 private:
  std::vector<LinkBound> link_;
  std::vector<PathBound> path_;
  BoundMode mode_ = BoundMode::kStrict;
};

/// Running component-wise sum of path metrics along a path.
struct MetricAccumulator {
  std::vector<double> sums;

  MetricAccumulator() = default;
  explicit MetricAccumulator(std::size_t arity) : sums(arity, 0.0) {}

  void extend(std::span<const double> path_metrics);

  bool operator==(const MetricAccumulator&) const = default;
};

/// Every link bound satisfied by these link metrics. Unchecked hot-path
/// form; the caller guarantees arity.
inline bool links_satisfy(std::span<const double> link_metrics, const ConstraintSet& c) {
  for (const LinkBound& b : c.link_bounds()) {
    if (!(link_metrics[b.metric] >= b.lower)) return false;
  }
  return true;
}

/// Throws Error(kArityMismatch) if a bound indexes past the edge's metrics.
bool edge_feasible(const EdgeMetrics& edge, const ConstraintSet& c);

/// Throws Error(kArityMismatch) if a bound indexes past the accumulator.
bool path_feasible(const MetricAccumulator& acc, const ConstraintSet& c);

/// Natural logarithm of each value, so that a bound on a product of
/// positive metrics becomes a bound on a sum. Throws kNonPositiveValue.
std::vector<double> to_additive(std::span<const double> values);

/// Parses one literal: `link <index> >= <value>` or `path <index> < <value>`
/// (`<=` selects non-strict comparison). Blank lines and `#` comments are
/// ignored by parse_constraints.
ConstraintSet parse_constraints(std::string_view text);

/// Appends one literal to `links` / `paths`; returns the comparison mode it
/// requested for path literals (strict for link literals).
BoundMode parse_constraint_literal(std::string_view line, std::vector<LinkBound>& links,
                                   std::vector<PathBound>& paths);

std::string format_constraints(const ConstraintSet& c);

}  // namespace pathembed
