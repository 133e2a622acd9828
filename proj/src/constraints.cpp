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

#include "pathembed/constraints.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "pathembed/error.hpp"
#include "pathembed/text.hpp"

namespace pathembed {

ConstraintSet::ConstraintSet(std::vector<LinkBound> link_bounds,
                             std::vector<PathBound> path_bounds, BoundMode mode)
    : link_(std::move(link_bounds)), path_(std::move(path_bounds)), mode_(mode) {
  std::set<std::size_t> seen;
  for (const auto& b : link_) {
    if (!seen.insert(b.metric).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate link bound on metric " + std::to_string(b.metric));
    }
  }
  seen.clear();
  for (const auto& b : path_) {
    if (!seen.insert(b.metric).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate path bound on metric " + std::to_string(b.metric));
    }
  }
}

void ConstraintSet::validate(MetricArity arity) const {
  for (const auto& b : link_) {
    if (b.metric >= arity.link) {
      throw Error(ErrorCode::kArityMismatch,
                  "link bound on metric " + std::to_string(b.metric) + " but graph has " +
                      std::to_string(arity.link) + " link metrics");
    }
  }
  for (const auto& b : path_) {
    if (b.metric >= arity.path) {
      throw Error(ErrorCode::kArityMismatch,
                  "path bound on metric " + std::to_string(b.metric) + " but graph has " +
                      std::to_string(arity.path) + " path metrics");
    }
  }
}

void MetricAccumulator::extend(std::span<const double> path_metrics) {
  if (sums.size() != path_metrics.size()) {
    throw Error(ErrorCode::kArityMismatch, "accumulator arity does not match edge");
  }
  for (std::size_t i = 0; i < sums.size(); ++i) sums[i] += path_metrics[i];
}

bool edge_feasible(const EdgeMetrics& edge, const ConstraintSet& c) {
  c.validate({edge.link.size(), std::size_t(-1)});
  return links_satisfy(edge.link, c);
}

bool path_feasible(const MetricAccumulator& acc, const ConstraintSet& c) {
  c.validate({std::size_t(-1), acc.sums.size()});
  for (const PathBound& b : c.path_bounds()) {
    if (!c.within(acc.sums[b.metric], b.upper)) return false;
  }
  return true;
}

std::vector<double> to_additive(std::span<const double> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) {
    if (!(v > 0.0)) {
      throw Error(ErrorCode::kNonPositiveValue,
                  "multiplicative metric must be positive, got " + format_number(v));
    }
    out.push_back(std::log(v));
  }
  return out;
}

BoundMode parse_constraint_literal(std::string_view line, std::vector<LinkBound>& links,
                                   std::vector<PathBound>& paths) {
  const auto tok = split_ws(line);
  auto fail = [&](const std::string& why) -> BoundMode {
    throw Error(ErrorCode::kParseError,
                "bad constraint '" + std::string(line) + "': " + why);
  };
  if (tok.size() != 4) return fail("expected '<link|path> <index> <op> <value>'");
  const auto index = parse_index(tok[1]);
  const auto value = parse_double(tok[3]);
  if (!index) return fail("metric index is not a non-negative integer");
  if (!value) return fail("bound is not a number");
  if (tok[0] == "link") {
    if (tok[2] != ">=") return fail("link bounds use '>='");
    links.push_back({*index, *value});
    return BoundMode::kStrict;
  }
  if (tok[0] == "path") {
    if (tok[2] != "<" && tok[2] != "<=") return fail("path bounds use '<' or '<='");
    paths.push_back({*index, *value});
    return tok[2] == "<" ? BoundMode::kStrict : BoundMode::kNonStrict;
  }
  return fail("kind must be 'link' or 'path'");
}

ConstraintSet parse_constraints(std::string_view text) {
  std::vector<LinkBound> links;
  std::vector<PathBound> paths;
  std::optional<BoundMode> mode;
  for (std::string_view line : split_lines(text)) {
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    const bool is_path = line.starts_with("path");
    BoundMode m = parse_constraint_literal(line, links, paths);
    if (!is_path) continue;
    if (mode && *mode != m) {
      throw Error(ErrorCode::kParseError, "path bounds mix '<' and '<='");
    }
    mode = m;
  }
  return ConstraintSet(std::move(links), std::move(paths), mode.value_or(BoundMode::kStrict));
}

std::string format_constraints(const ConstraintSet& c) {
  std::ostringstream os;
  for (const auto& b : c.link_bounds()) {
    os << "link " << b.metric << " >= " << format_number(b.lower) << '\n';
  }
  const char* op = c.mode() == BoundMode::kStrict ? " < " : " <= ";
  for (const auto& b : c.path_bounds()) {
    os << "path " << b.metric << op << format_number(b.upper) << '\n';
  }
  return os.str();
}

}  // namespace pathembed
