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

#include "pathembed/topology_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "pathembed/error.hpp"
#include "pathembed/text.hpp"

namespace pathembed {

namespace {

[[noreturn]] void fail_at(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + why);
}

std::string label_from_comment(std::string_view raw) {
  const auto hash = raw.find('#');
  if (hash == std::string_view::npos) return {};
  for (std::string_view tok : split_ws(raw.substr(hash + 1))) {
    if (tok.starts_with("label=")) return std::string(tok.substr(6));
  }
  return {};
}

}  // namespace

Topology parse_topology(std::string_view text) {
  std::optional<std::size_t> node_count;
  MetricArity arity;
  std::vector<double> caps;
  std::vector<std::string> labels;
  std::vector<EdgeSpec> edges;

  std::size_t lineno = 0;
  for (std::string_view raw : split_lines(text)) {
    ++lineno;
    const auto tok = split_ws(strip_comment(raw));
    if (tok.empty()) continue;

    if (!node_count) {
      if (tok.size() != 6 || tok[0] != "nodes" || tok[2] != "link_metrics" ||
          tok[4] != "path_metrics") {
        fail_at(lineno, "expected 'nodes <N> link_metrics <l> path_metrics <p>'");
      }
      const auto n = parse_index(tok[1]);
      const auto l = parse_index(tok[3]);
      const auto p = parse_index(tok[5]);
      if (!n || !l || !p) fail_at(lineno, "header counts must be non-negative integers");
      node_count = *n;
      arity = {*l, *p};
      caps.assign(*n, 0.0);
      labels.assign(*n, {});
      continue;
    }

    if (tok[0] == "node") {
      if (tok.size() != 4 || tok[2] != "cap") fail_at(lineno, "expected 'node <id> cap <cpu>'");
      const auto id = parse_index(tok[1]);
      const auto cap = parse_double(tok[3]);
      if (!id) fail_at(lineno, "node id is not a non-negative integer");
      if (*id >= *node_count) fail_at(lineno, "node id " + std::to_string(*id) + " out of range");
      if (!cap) fail_at(lineno, "capacity is not a number");
      caps[*id] = *cap;
      labels[*id] = label_from_comment(raw);
    } else if (tok[0] == "edge") {
      const std::size_t want = 3 + arity.link + arity.path;
      if (tok.size() != want) {
        fail_at(lineno, "edge needs " + std::to_string(arity.link) + " link and " +
                            std::to_string(arity.path) + " path metrics");
      }
      const auto s = parse_index(tok[1]);
      const auto d = parse_index(tok[2]);
      if (!s || !d) fail_at(lineno, "edge endpoints must be non-negative integers");
      if (*s >= *node_count || *d >= *node_count) fail_at(lineno, "edge endpoint out of range");
      if (*s == *d) fail_at(lineno, "self-loop on node " + std::to_string(*s));
      EdgeSpec e{static_cast<NodeId>(*s), static_cast<NodeId>(*d), {}};
      for (std::size_t i = 0; i < arity.link + arity.path; ++i) {
        const auto v = parse_double(tok[3 + i]);
        if (!v) fail_at(lineno, "metric '" + std::string(tok[3 + i]) + "' is not a number");
        (i < arity.link ? e.metrics.link : e.metrics.path).push_back(*v);
      }
      edges.push_back(std::move(e));
    } else {
      fail_at(lineno, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  if (!node_count) fail_at(lineno == 0 ? 1 : lineno, "missing 'nodes' header");

  Topology t;
  t.graph = build_graph(*node_count, edges, std::move(caps), arity);
  t.labels = std::move(labels);
  return t;
}

Topology read_topology_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_topology(buf.str());
}

std::string format_topology(const PhysicalGraph& g, const std::vector<std::string>& labels) {
  std::ostringstream os;
  const MetricArity a = g.arity();
  os << "nodes " << g.node_count() << " link_metrics " << a.link << " path_metrics " << a.path
     << '\n';
  for (NodeId u = 0; u < g.node_count(); ++u) {
    os << "node " << u << " cap " << format_number(g.node_capacity(u));
    if (u < labels.size() && !labels[u].empty()) os << "  # label=" << labels[u];
    os << '\n';
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    os << "edge " << g.source(e) << ' ' << g.target(e);
    for (double v : g.link_metrics(e)) os << ' ' << format_number(v);
    for (double v : g.path_metrics(e)) os << ' ' << format_number(v);
    os << '\n';
  }
  return os.str();
}

void write_topology_file(const std::filesystem::path& file, const PhysicalGraph& g,
                         const std::vector<std::string>& labels) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kConfigError, "cannot write " + file.string());
  out << format_topology(g, labels);
}

std::optional<NodeId> resolve_node(const Topology& t, std::string_view token) {
  if (const auto id = parse_index(token); id && *id < t.graph.node_count()) {
    return static_cast<NodeId>(*id);
  }
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    if (!t.labels[i].empty() && t.labels[i] == token) return static_cast<NodeId>(i);
  }
  return std::nullopt;
}

}  // namespace pathembed
