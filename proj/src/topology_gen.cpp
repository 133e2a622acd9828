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

#include "pathembed/topology_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pathembed/error.hpp"
#include "pathembed/rng.hpp"
#include "pathembed/text.hpp"

namespace pathembed {

namespace {

constexpr int kConnectAttempts = 32;

struct Point {
  double x;
  double y;
};

struct Link {
  NodeId a;
  NodeId b;
};

double distance(const Point& p, const Point& q) { return std::hypot(p.x - q.x, p.y - q.y); }

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<Point> place_nodes(Rng& rng, std::size_t n) {
  std::vector<Point> pts(n);
  for (auto& p : pts) {
    p.x = rng.uniform();
    p.y = rng.uniform();
  }
  return pts;
}

bool links_connected(std::size_t n, const std::vector<Link>& links) {
  DisjointSets ds(n);
  for (const Link& l : links) ds.join(l.a, l.b);
  for (std::size_t i = 1; i < n; ++i) {
    if (ds.find(i) != ds.find(0)) return false;
  }
  return true;
}

// One Waxman draw. Each pair gets a single uniform u; the pair is a link
// iff u < alpha * f(d). With a target degree, alpha is set to the m-th
// smallest ratio u / f(d), which hits the target link count exactly.
std::vector<Link> waxman_links(const GenSpec& spec, Rng& rng, const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  const double max_dist = std::sqrt(2.0);
  std::vector<std::pair<double, std::size_t>> ratios;
  std::vector<Link> pairs;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const double f = std::exp(-distance(pts[i], pts[j]) / (spec.beta * max_dist));
      const double u = rng.uniform();
      const double ratio = u / f;
      if (ratio < 1.0) {
        ratios.emplace_back(ratio, pairs.size());
        pairs.push_back({i, j});
      }
    }
  }

  double alpha = spec.alpha;
  if (spec.target_avg_degree) {
    const auto m = static_cast<std::size_t>(std::llround(*spec.target_avg_degree * n / 2.0));
    if (m > ratios.size()) {
      throw Error(ErrorCode::kDegreeUnreachable,
                  "waxman cannot reach average degree " +
                      format_number(*spec.target_avg_degree) + " with beta " +
                      format_number(spec.beta));
    }
    if (m == 0) return {};
    auto nth = ratios.begin() + static_cast<std::ptrdiff_t>(m - 1);
    std::nth_element(ratios.begin(), nth, ratios.end());
    alpha = std::nextafter(nth->first, 2.0);
  }

  std::vector<char> keep(pairs.size(), 0);
  for (const auto& [ratio, idx] : ratios) {
    if (ratio < alpha) keep[idx] = 1;
  }
  std::vector<Link> links;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (keep[i]) links.push_back(pairs[i]);
  }
  return links;
}

std::vector<Link> barabasi_albert_links(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<Link> links;
  std::vector<NodeId> endpoints;  // each node repeated once per incident link
  const std::size_t seed_nodes = m + 1;
  for (NodeId i = 0; i < seed_nodes; ++i) {
    for (NodeId j = i + 1; j < seed_nodes; ++j) {
      links.push_back({i, j});
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  }
  for (NodeId v = static_cast<NodeId>(seed_nodes); v < n; ++v) {
    std::vector<NodeId> chosen;
    while (chosen.size() < m) {
      const NodeId t = endpoints[rng.below(endpoints.size())];
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
    }
    std::sort(chosen.begin(), chosen.end());
    for (NodeId t : chosen) {
      links.push_back({t, v});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return links;
}

double median(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  double hi = v[mid];
  if (v.size() % 2 == 1) return hi;
  const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lo + hi) / 2.0;
}

// Joins every component to the one holding node 0 through its closest
// node pair. Returns the added links.
std::vector<Link> bridge_components(const std::vector<Point>& pts, const std::vector<Link>& links) {
  const std::size_t n = pts.size();
  DisjointSets ds(n);
  for (const Link& l : links) ds.join(l.a, l.b);
  std::vector<Link> bridges;
  std::vector<char> in_main(n, 0);
  for (std::size_t i = 0; i < n; ++i) in_main[i] = ds.find(i) == ds.find(0);
  for (std::size_t start = 0; start < n; ++start) {
    if (in_main[start]) continue;
    const std::size_t root = ds.find(start);
    std::vector<NodeId> comp;
    for (std::size_t i = start; i < n; ++i) {
      if (!in_main[i] && ds.find(i) == root) comp.push_back(static_cast<NodeId>(i));
    }
    double best = INFINITY;
    Link bridge{0, 0};
    for (NodeId a : comp) {
      for (NodeId b = 0; b < n; ++b) {
        if (!in_main[b]) continue;
        const double d = distance(pts[a], pts[b]);
        if (d < best) {
          best = d;
          bridge = {std::min(a, b), std::max(a, b)};
        }
      }
    }
    bridges.push_back(bridge);
    for (NodeId a : comp) in_main[a] = 1;
  }
  return bridges;
}

}  // namespace

std::string_view to_string(TopologyModel m) {
  return m == TopologyModel::kWaxman ? "waxman" : "barabasi_albert";
}

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::kLow: return "low";
    case Severity::kMed: return "med";
    case Severity::kHigh: return "high";
  }
  return "unknown";
}

std::optional<TopologyModel> parse_model(std::string_view s) {
  if (s == "waxman") return TopologyModel::kWaxman;
  if (s == "barabasi_albert" || s == "ba") return TopologyModel::kBarabasiAlbert;
  return std::nullopt;
}

std::optional<Severity> parse_severity(std::string_view s) {
  if (s == "low") return Severity::kLow;
  if (s == "med" || s == "medium") return Severity::kMed;
  if (s == "high") return Severity::kHigh;
  return std::nullopt;
}

void GenSpec::validate() const {
  auto bad = [](const std::string& field, const std::string& why) {
    throw Error(ErrorCode::kInvalidArgument, field + ": " + why);
  };
  if (node_count < 2) bad("nodes", "need at least 2 nodes");
  if (!(alpha > 0.0 && alpha <= 1.0)) bad("alpha", "must be in (0, 1]");
  if (!(beta > 0.0 && beta <= 1.0)) bad("beta", "must be in (0, 1]");
  if (ba_m < 1) bad("m", "must be at least 1");
  if (!(bw_low <= bw_high)) bad("bw", "low must not exceed high");
  if (bw_low < 0.0) bad("bw", "must be non-negative");
  if (target_avg_degree && !(*target_avg_degree > 0.0)) bad("degree", "must be positive");
  if (delay_model == DelayModel::kEuclideanScaled && !(max_delay > 0.0)) {
    bad("max_delay", "must be positive");
  }
  if (delay_model == DelayModel::kUniform && !(delay_low <= delay_high && delay_low >= 0.0)) {
    bad("delay", "need 0 <= low <= high");
  }
  if (cpu_units < 0.0) bad("cpu", "must be non-negative");
}

PhysicalGraph generate(const GenSpec& spec) {
  spec.validate();
  const std::size_t n = spec.node_count;

  std::vector<Point> pts;
  std::vector<Link> links;
  std::uint64_t stream = spec.seed;
  if (spec.model == TopologyModel::kWaxman) {
    std::vector<Point> first_pts;
    std::vector<Link> first_links;
    bool connected = false;
    for (int attempt = 0; attempt < kConnectAttempts && !connected; ++attempt) {
      Rng rng(derive_seed(spec.seed + static_cast<std::uint64_t>(attempt), 0));
      pts = place_nodes(rng, n);
      links = waxman_links(spec, rng, pts);
      connected = links_connected(n, links);
      if (attempt == 0) {
        first_pts = pts;
        first_links = links;
      }
      if (connected) stream = spec.seed + static_cast<std::uint64_t>(attempt);
    }
    if (!connected) {
      pts = std::move(first_pts);
      links = std::move(first_links);
    }
  } else {
    std::size_t m = spec.ba_m;
    if (spec.target_avg_degree) {
      m = std::max<std::size_t>(
          1, static_cast<std::size_t>(std::llround(*spec.target_avg_degree / 2.0)));
    }
    if (m + 1 > n) {
      throw Error(ErrorCode::kDegreeUnreachable,
                  "barabasi_albert with m=" + std::to_string(m) + " needs more than " +
                      std::to_string(n) + " nodes");
    }
    Rng rng(derive_seed(spec.seed, 0));
    pts = place_nodes(rng, n);
    links = barabasi_albert_links(n, m, rng);
  }

  Rng metric_rng(derive_seed(stream, 1));
  std::vector<double> bw(links.size());
  std::vector<double> delay(links.size());
  for (double& b : bw) b = metric_rng.uniform(spec.bw_low, spec.bw_high);
  if (spec.delay_model == DelayModel::kUniform) {
    for (double& d : delay) d = metric_rng.uniform(spec.delay_low, spec.delay_high);
  } else {
    double longest = 0.0;
    for (const Link& l : links) longest = std::max(longest, distance(pts[l.a], pts[l.b]));
    for (std::size_t i = 0; i < links.size(); ++i) {
      const double d = distance(pts[links[i].a], pts[links[i].b]);
      delay[i] = longest > 0.0 ? spec.max_delay * d / longest : spec.max_delay;
    }
  }

  const auto bridges = bridge_components(pts, links);
  if (!bridges.empty()) {
    const double bw_mid = bw.empty() ? (spec.bw_low + spec.bw_high) / 2.0 : median(bw);
    const double delay_mid =
        delay.empty() ? (spec.delay_model == DelayModel::kUniform
                             ? (spec.delay_low + spec.delay_high) / 2.0
                             : spec.max_delay / 2.0)
                      : median(delay);
    for (const Link& b : bridges) {
      links.push_back(b);
      bw.push_back(bw_mid);
      delay.push_back(delay_mid);
    }
  }

  std::vector<EdgeSpec> edges;
  edges.reserve(links.size() * 2);
  for (std::size_t i = 0; i < links.size(); ++i) {
    const EdgeMetrics m{{bw[i]}, {delay[i]}};
    edges.push_back({links[i].a, links[i].b, m});
    edges.push_back({links[i].b, links[i].a, m});
  }
  return build_graph(n, edges, std::vector<double>(n, spec.cpu_units), MetricArity{1, 1});
}

double average_degree(const PhysicalGraph& g) {
  if (g.node_count() == 0) return 0.0;
  return static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

bool weakly_connected(const PhysicalGraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return true;
  DisjointSets ds(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) ds.join(g.source(e), g.target(e));
  for (std::size_t i = 1; i < n; ++i) {
    if (ds.find(i) != ds.find(0)) return false;
  }
  return true;
}

double bandwidth_bound(Severity level) {
  switch (level) {
    case Severity::kLow: return 1.0;
    case Severity::kMed: return 4.0;
    case Severity::kHigh: return 7.0;
  }
  return 1.0;
}

double delay_factor(Severity level) {
  switch (level) {
    case Severity::kLow: return 0.8;
    case Severity::kMed: return 2.5;
    case Severity::kHigh: return 4.0;
  }
  return 4.0;
}

namespace {

ConstraintSet bounds_with_delay_factor(const PhysicalGraph& g, Severity bw_level, double factor) {
  const auto max_delay = g.max_path_metric(0);
  if (!max_delay || g.arity().link < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "severity needs a graph with edges carrying bandwidth and delay");
  }
  return ConstraintSet({{0, bandwidth_bound(bw_level)}}, {{0, factor * *max_delay}});
}

}  // namespace

ConstraintSet resolve_constraint_percent(const PhysicalGraph& g, Severity bw_level,
                                         double delay_percent) {
  return bounds_with_delay_factor(g, bw_level, delay_percent / 100.0);
}

ConstraintSet resolve_constraint_severity(const PhysicalGraph& g, Severity bw_level,
                                          Severity delay_level) {
  return bounds_with_delay_factor(g, bw_level, delay_factor(delay_level));
}

}  // namespace pathembed
