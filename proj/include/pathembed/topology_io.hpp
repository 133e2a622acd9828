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

/// @file topology_io.hpp
/// Line-oriented topology text format:
///
///     nodes <N> link_metrics <l> path_metrics <p>
///     node <id> cap <cpu>                  # label=<name>   (optional)
///     edge <src> <dst> <lm_1 .. lm_l> <pm_1 .. pm_p>
///
/// `#` starts a comment. Node lines are optional (missing capacity is 0).
/// A `label=<name>` annotation in a node line's comment gives the node a
/// display name for human-facing output.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathembed/graph.hpp"

namespace pathembed {

struct Topology {
  PhysicalGraph graph;
  /// One entry per node; empty when the node has no label.
  std::vector<std::string> labels;
};

/// Throws Error(kParseError) with the 1-based line number in the message,
/// or the graph construction errors (also prefixed with the line number).
Topology parse_topology(std::string_view text);
Topology read_topology_file(const std::filesystem::path& file);

std::string format_topology(const PhysicalGraph& g, const std::vector<std::string>& labels = {});
void write_topology_file(const std::filesystem::path& file, const PhysicalGraph& g,
                         const std::vector<std::string>& labels = {});

/// Resolves a node given as a dense id or as a label.
std::optional<NodeId> resolve_node(const Topology& t, std::string_view token);

}  // namespace pathembed
