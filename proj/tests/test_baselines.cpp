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
#include <random>
#include <vector>

#include "instances.hpp"
#include "oracle.hpp"
#include "pathembed/backend.hpp"
#include "pathembed/baselines.hpp"
#include "pathembed/error.hpp"
#include "pathembed/nm_solver.hpp"

namespace pathembed {
namespace {

using fixtures::kA;
using fixtures::kB;
using fixtures::kX;
using fixtures::kY;

TEST(EDijkstra, WorkedExampleMinimumDelay) {
  const PhysicalGraph g = fixtures::worked_example();
  const ConstraintSet c = fixtures::worked_constraints();
  const SolveResult r = solve_edijkstra(g, kX, kY, c);
  ASSERT_TRUE(r.ok());
  const auto want = oracle::solve(g, kX, kY, c);
  ASSERT_TRUE(want.min_metric);
  EXPECT_EQ(r.path.accumulated.sums[0], *want.min_metric);
  EXPECT_GE(r.path.hop_count(), solve_l1(g, kX, kY, c).path.hop_count());
}

TEST(EDijkstra, SourceIsDestination) {
  const PhysicalGraph g = fixtures::worked_example();
  const SolveResult r = solve_edijkstra(g, kA, kA, fixtures::worked_constraints());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.path.hop_count(), 0u);
  EXPECT_EQ(r.path.accumulated.sums, std::vector<double>{0.0});
}

TEST(EDijkstra, AllEdgesPruned) {
  const PhysicalGraph g = fixtures::worked_example();
  EXPECT_EQ(solve_edijkstra(g, kX, kY, ConstraintSet({{0, 100.0}}, {{0, 50.0}})).status,
            SolveStatus::kUnreachable);
}

TEST(EDijkstra, BoundTooTight) {
  const PhysicalGraph g = fixtures::worked_example();
  EXPECT_EQ(solve_edijkstra(g, kX, kY, ConstraintSet({{0, 5.0}}, {{0, 4.0}})).status,
            SolveStatus::kInfeasible);
}

TEST(EDijkstra, RejectsNegativeMetric) {
  const PhysicalGraph g = fixtures::negative_cycle();
  try {
    solve_edijkstra(g, 0, 4, ConstraintSet({}, {{0, 5.0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeMetric);
  }
}

TEST(Ksp, OneCandidateIsInfeasible) {
  const PhysicalGraph g = fixtures::worked_example();
  const ConstraintSet c = fixtures::worked_constraints();
  EXPECT_EQ(solve_ksp(g, kX, kY, c, {1, KspRanking::kByHops}).status, SolveStatus::kInfeasible);
  EXPECT_TRUE(solve_general(g, kX, kY, c).ok());
  const auto want = oracle::solve(g, kX, kY, c);
  EXPECT_EQ(want.min_hops, 3u);  // no feasible 2-hop path
}

TEST(Ksp, FourCandidatesReachFeasiblePath) {
  const PhysicalGraph g = fixtures::worked_example();
  const SolveResult r = solve_ksp(g, kX, kY, fixtures::worked_constraints(), {4, KspRanking::kByHops});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.path.nodes, (std::vector<NodeId>{kX, kB, kA, kY}));
}

TEST(Ksp, UnconstrainedIsShortestPath) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = fixtures::random_instance(rng, 10, 1);
    const auto want = oracle::solve(inst.graph, inst.src, inst.dst, ConstraintSet{});
    const SolveResult r =
        solve_ksp(inst.graph, inst.src, inst.dst, ConstraintSet{}, {1, KspRanking::kByHops});
    if (want.min_hops) {
      ASSERT_TRUE(r.ok());
      EXPECT_EQ(r.path.nodes, want.best.front());
    } else {
      EXPECT_EQ(r.status, SolveStatus::kUnreachable);
    }
  }
}

TEST(Ksp, RankingByPathMetric) {
  const PhysicalGraph g = fixtures::worked_example();
  KShortestPaths ksp(g, kX, kY, KspRanking::kByPathMetric, 0);
  std::vector<double> delays;
  while (auto p = ksp.next()) delays.push_back(p->accumulated.sums[0]);
  EXPECT_TRUE(std::is_sorted(delays.begin(), delays.end()));
  EXPECT_EQ(delays.front(), 2.0);  // X-B-Y
}

// Yen enumeration against a sorted brute-force listing.
TEST(Ksp, EnumerationMatchesSortedBruteForce) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = fixtures::random_instance(rng, 8, 1);
    for (const KspRanking ranking : {KspRanking::kByHops, KspRanking::kByPathMetric}) {
      struct Entry {
        double cost;
        std::size_t hops;
        std::vector<NodeId> nodes;
        std::vector<EdgeId> edges;
        bool operator<(const Entry& o) const {
          return std::tie(cost, hops, nodes, edges) < std::tie(o.cost, o.hops, o.nodes, o.edges);
        }
      };
      std::vector<Entry> want;
      oracle::for_each_simple_path(inst.graph, inst.src, inst.dst, [&](const oracle::Walk& w) {
        const double cost = ranking == KspRanking::kByHops
                                ? static_cast<double>(w.edges.size())
                                : oracle::path_sum(inst.graph, w, 0);
        want.push_back({cost, w.edges.size(), w.nodes, w.edges});
      });
      std::sort(want.begin(), want.end());
      KShortestPaths ksp(inst.graph, inst.src, inst.dst, ranking, 0);
      std::size_t i = 0;
      while (auto p = ksp.next()) {
        ASSERT_LT(i, want.size()) << "trial " << trial;
        EXPECT_EQ(p->edges, want[i].edges) << "trial " << trial << " rank " << i;
        ++i;
      }
      EXPECT_EQ(i, want.size()) << "trial " << trial;
    }
  }
}

TEST(Ksp, SolvedSetMonotoneInK) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = fixtures::random_instance(rng, 10, 1);
    bool solved_before = false;
    for (std::size_t k = 1; k <= 6; ++k) {
      const bool solved =
          solve_ksp(inst.graph, inst.src, inst.dst, inst.constraints, {k, KspRanking::kByHops}).ok();
      EXPECT_TRUE(solved || !solved_before) << "trial " << trial << " k " << k;
      solved_before = solved;
    }
  }
}

TEST(Exhaustive, WorkedExample) {
  const PhysicalGraph g = fixtures::worked_example();
  const SolveResult r = solve_exhaustive(g, kX, kY, fixtures::worked_constraints());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.path.nodes, (std::vector<NodeId>{kX, kB, kA, kY}));
}

TEST(Exhaustive, CompleteGraphDirectEdge) {
  std::vector<EdgeSpec> edges;
  for (NodeId u = 0; u < 5; ++u) {
    for (NodeId v = 0; v < 5; ++v) {
      if (u != v) edges.push_back({u, v, {{1}, {1}}});
    }
  }
  const PhysicalGraph g = build_graph(5, edges);
  const SolveResult r = solve_exhaustive(g, 1, 4, ConstraintSet{});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.path.nodes, (std::vector<NodeId>{1, 4}));
}

TEST(Exhaustive, SizeGuard) {
  std::vector<EdgeSpec> edges;
  for (NodeId u = 0; u + 1 < 15; ++u) edges.push_back({u, u + 1, {{1}, {1}}});
  const PhysicalGraph g = build_graph(15, edges);
  EXPECT_EQ(solve_exhaustive(g, 0, 14, ConstraintSet{}).status, SolveStatus::kLimit);
  EXPECT_TRUE(solve_exhaustive(g, 0, 14, ConstraintSet{}, {15}).ok());
}

// Cross-solver properties on the seeded suite.
TEST(CrossSolver, OracleSupremacyAndDominance) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 400; ++trial) {
    const auto inst = fixtures::random_instance(rng, 10, 1);
    const auto& [g, s, d, c] = inst;
    const SolveResult ex = solve_exhaustive(g, s, d, c);
    const SolveResult l1 = solve_l1(g, s, d, c);
    const SolveResult gen = solve_general(g, s, d, c);
    const SolveResult ed = solve_edijkstra(g, s, d, c);
    const SolveResult k1 = solve_ksp(g, s, d, c, {1, KspRanking::kByHops});
    const SolveResult k3 = solve_ksp(g, s, d, c, {3, KspRanking::kByHops});
    if (!ex.ok()) {
      for (const SolveResult* r : {&l1, &gen, &ed, &k1, &k3}) EXPECT_FALSE(r->ok());
      continue;
    }
    EXPECT_EQ(gen.path, ex.path) << "trial " << trial;
    if (ed.ok()) {
      ASSERT_TRUE(l1.ok());
      EXPECT_LE(l1.path.hop_count(), ed.path.hop_count());
    }
    for (const SolveResult* k : {&k1, &k3}) {
      if (k->ok()) {
        ASSERT_TRUE(gen.ok());
        EXPECT_LE(gen.path.hop_count(), k->path.hop_count());
      }
    }
    for (const SolveResult* r : {&l1, &gen, &ed, &k1, &k3}) {
      if (r->ok()) EXPECT_EQ(oracle::violation(g, r->path, s, d, c), "") << "trial " << trial;
    }
  }
}

TEST(EDijkstra, MatchesMinimumDelayOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = fixtures::random_instance(rng, 10, 1);
    const auto want = oracle::solve(inst.graph, inst.src, inst.dst, inst.constraints);
    const SolveResult r = solve_edijkstra(inst.graph, inst.src, inst.dst, inst.constraints);
    ASSERT_EQ(r.ok(), want.min_metric.has_value()) << "trial " << trial;
    if (r.ok()) EXPECT_EQ(r.path.accumulated.sums[0], *want.min_metric);
  }
}

TEST(Backend, ParsesTokens) {
  EXPECT_EQ(parse_backend("nm-general").kind, BackendKind::kNmGeneral);
  EXPECT_EQ(parse_backend("nm-l1").kind, BackendKind::kNmL1);
  EXPECT_EQ(parse_backend("edijkstra").kind, BackendKind::kEDijkstra);
  EXPECT_EQ(parse_backend("exhaustive").kind, BackendKind::kExhaustive);
  const Backend k = parse_backend("ksp:3:by_path_metric=1");
  EXPECT_EQ(k.kind, BackendKind::kKsp);
  EXPECT_EQ(k.ksp, (KspConfig{3, KspRanking::kByPathMetric, 1}));
  EXPECT_EQ(parse_backend("ksp:2").ksp, (KspConfig{2, KspRanking::kByHops, 0}));
  EXPECT_EQ(parse_backend("ksp:1:by_hops").name(), "ksp:1:by_hops");
  for (const char* bad : {"nm", "ksp", "ksp:0", "ksp:x", "ksp:1:fast", ""}) {
    try {
      parse_backend(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kUnknownBackend);
    }
  }
}

TEST(Backend, SingleBoundSolversAcceptBandwidthOnly) {
  const PhysicalGraph g = fixtures::worked_example();
  const ConstraintSet c({{0, 5.0}}, {});
  for (const char* b : {"nm-l1", "edijkstra", "nm-general"}) {
    const SolveResult r = run_backend(parse_backend(b), g, kX, kY, c);
    ASSERT_TRUE(r.ok()) << b;
    EXPECT_EQ(oracle::violation(g, r.path, kX, kY, c), "");
  }
}

TEST(ResultLine, Format) {
  const PhysicalGraph g = fixtures::worked_example();
  SolveResult r = solve_general(g, kX, kY, fixtures::worked_constraints());
  r.micros = 12;
  const std::vector<std::string> labels = {"X", "A", "B", "Y"};
  EXPECT_EQ(format_result_line(r, labels), "status=ok hops=3 path=X,B,A,Y sums=4 mins=5 micros=12");
  EXPECT_EQ(format_result_line(r), "status=ok hops=3 path=0,2,1,3 sums=4 mins=5 micros=12");
  SolveResult bad;
  bad.status = SolveStatus::kNegativeCycle;
  EXPECT_EQ(format_result_line(bad), "status=negcycle hops=-1 path= sums= mins= micros=0");
}

}  // namespace
}  // namespace pathembed
