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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pathembed/error.hpp"
#include "pathembed/topology_gen.hpp"

namespace pathembed {
namespace {

GenSpec waxman(std::size_t n, std::optional<double> degree, std::uint64_t seed) {
  GenSpec s;
  s.node_count = n;
  s.target_avg_degree = degree;
  s.seed = seed;
  return s;
}

TEST(Generate, WaxmanCapacitiesAndShape) {
  GenSpec s = waxman(100, 4.0, 1);
  s.cpu_units = 200.0;
  const PhysicalGraph g = generate(s);
  EXPECT_EQ(g.node_count(), 100u);
  for (NodeId u = 0; u < 100; ++u) EXPECT_EQ(g.node_capacity(u), 200.0);
  EXPECT_EQ(g.arity(), (MetricArity{1, 1}));
  // Symmetric pairs with equal metrics.
  ASSERT_EQ(g.edge_count() % 2, 0u);
  for (EdgeId e = 0; e < g.edge_count(); e += 2) {
    EXPECT_EQ(g.source(e), g.target(e + 1));
    EXPECT_EQ(g.target(e), g.source(e + 1));
    EXPECT_EQ(g.metrics(e), g.metrics(e + 1));
  }
}

TEST(Generate, BarabasiAlbertDeterministic) {
  GenSpec s;
  s.model = TopologyModel::kBarabasiAlbert;
  s.ba_m = 2;
  s.node_count = 10;
  s.seed = 7;
  EXPECT_EQ(generate(s), generate(s));
  s.seed = 8;
  EXPECT_TRUE(weakly_connected(generate(s)));
}

TEST(Generate, SeedChangesGraph) {
  EXPECT_EQ(generate(waxman(200, 4.0, 3)), generate(waxman(200, 4.0, 3)));
  EXPECT_NE(generate(waxman(200, 4.0, 3)), generate(waxman(200, 4.0, 4)));
}

TEST(Generate, WaxmanDegreeTargetAndConnectivity) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PhysicalGraph g = generate(waxman(1000, 4.0, seed));
    EXPECT_TRUE(weakly_connected(g)) << "seed " << seed;
    EXPECT_NEAR(average_degree(g), 4.0, 0.4) << "seed " << seed;
  }
}

TEST(Generate, ConnectedAcrossModelsAndSizes) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    EXPECT_TRUE(weakly_connected(generate(waxman(60, std::nullopt, seed))));
    EXPECT_TRUE(weakly_connected(generate(waxman(60, 2.0, seed))));
    GenSpec ba = waxman(60, 3.0, seed);
    ba.model = TopologyModel::kBarabasiAlbert;
    EXPECT_TRUE(weakly_connected(generate(ba)));
  }
}

TEST(Generate, BandwidthMean) {
  double sum = 0.0;
  std::size_t links = 0;
  for (std::uint64_t seed = 1; links < 10000; ++seed) {
    const PhysicalGraph g = generate(waxman(1000, 4.0, seed));
    for (EdgeId e = 0; e < g.edge_count(); e += 2) {
      const double bw = g.link_metrics(e)[0];
      EXPECT_GE(bw, 1.0);
      EXPECT_LE(bw, 9.0);
      sum += bw;
      ++links;
    }
  }
  EXPECT_NEAR(sum / static_cast<double>(links), 5.0, 0.1);
}

TEST(Generate, EuclideanDelayMaximum) {
  GenSpec s = waxman(300, 4.0, 2);
  s.max_delay = 10.0;
  const PhysicalGraph g = generate(s);
  EXPECT_EQ(g.max_path_metric(0), 10.0);
}

TEST(Generate, UnreachableDegree) {
  GenSpec s = waxman(20, 25.0, 1);
  try {
    generate(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeUnreachable);
  }
}

TEST(GenSpec, ValidationNamesField) {
  auto field_of = [](GenSpec s) {
    try {
      s.validate();
    } catch (const Error& e) {
      const std::string what = e.what();
      return what.substr(0, what.find(':'));
    }
    return std::string("valid");
  };
  GenSpec s;
  EXPECT_EQ(field_of(s), "valid");
  s.alpha = 0.0;
  EXPECT_EQ(field_of(s), "alpha");
  s = GenSpec{};
  s.beta = 1.5;
  EXPECT_EQ(field_of(s), "beta");
  s = GenSpec{};
  s.node_count = 1;
  EXPECT_EQ(field_of(s), "nodes");
  s = GenSpec{};
  s.bw_low = 10.0;
  EXPECT_EQ(field_of(s), "bw");
}

TEST(Severity, BandwidthLevels) {
  const PhysicalGraph g = generate(waxman(50, 4.0, 1));
  EXPECT_EQ(resolve_constraint_severity(g, Severity::kHigh, Severity::kLow).link_bounds(),
            (std::vector<LinkBound>{{0, 7.0}}));
  EXPECT_EQ(bandwidth_bound(Severity::kLow), 1.0);
  EXPECT_EQ(bandwidth_bound(Severity::kMed), 4.0);
}

TEST(Severity, DelayHighIsFourTimesMax) {
  const PhysicalGraph g = generate(waxman(50, 4.0, 1));
  ASSERT_EQ(g.max_path_metric(0), 10.0);
  const ConstraintSet c = resolve_constraint_severity(g, Severity::kLow, Severity::kHigh);
  EXPECT_EQ(c.path_bounds(), (std::vector<PathBound>{{0, 40.0}}));
  EXPECT_EQ(resolve_constraint_severity(g, Severity::kLow, Severity::kMed).path_bounds()[0].upper,
            25.0);
  EXPECT_EQ(resolve_constraint_severity(g, Severity::kLow, Severity::kLow).path_bounds()[0].upper,
            8.0);
  EXPECT_EQ(resolve_constraint_percent(g, Severity::kLow, 50.0).path_bounds()[0].upper, 5.0);
  EXPECT_EQ(resolve_constraint_percent(g, Severity::kLow, 400.0).path_bounds()[0].upper, 40.0);
}

TEST(Severity, Names) {
  EXPECT_EQ(parse_severity("medium"), Severity::kMed);
  EXPECT_EQ(parse_severity("extreme"), std::nullopt);
  EXPECT_EQ(to_string(Severity::kHigh), "high");
  EXPECT_EQ(parse_model("ba"), TopologyModel::kBarabasiAlbert);
}

}  // namespace
}  // namespace pathembed
