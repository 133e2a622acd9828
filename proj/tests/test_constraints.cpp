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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "pathembed/constraints.hpp"
#include "pathembed/error.hpp"

namespace pathembed {
namespace {

TEST(EdgeFeasible, MeetsBoundExactly) {
  EXPECT_TRUE(edge_feasible({{5.0}, {5.0}}, ConstraintSet({{0, 5.0}}, {})));
}

TEST(EdgeFeasible, JustBelowBound) {
  EXPECT_FALSE(edge_feasible({{4.999}, {5.0}}, ConstraintSet({{0, 5.0}}, {})));
}

TEST(EdgeFeasible, NoLinkBounds) {
  EXPECT_TRUE(edge_feasible({{0.0}, {100.0}}, ConstraintSet({}, {{0, 1.0}})));
}

TEST(EdgeFeasible, ArityMismatch) {
  try {
    edge_feasible({{1.0}, {}}, ConstraintSet({{1, 0.5}}, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArityMismatch);
  }
}

MetricAccumulator acc(std::vector<double> sums) {
  MetricAccumulator a;
  a.sums = std::move(sums);
  return a;
}

TEST(PathFeasible, StrictBound) {
  const ConstraintSet c({}, {{0, 5.0}});
  EXPECT_TRUE(path_feasible(acc({4.0}), c));
  EXPECT_FALSE(path_feasible(acc({5.0}), c));
  EXPECT_TRUE(path_feasible(acc({4.0}), ConstraintSet{}));
}

TEST(PathFeasible, NonStrictModeAdmitsBoundary) {
  EXPECT_TRUE(path_feasible(acc({5.0}), ConstraintSet({}, {{0, 5.0}}, BoundMode::kNonStrict)));
}

TEST(PathFeasible, ArityMismatch) {
  try {
    path_feasible(acc({1.0}), ConstraintSet({}, {{2, 5.0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArityMismatch);
  }
}

TEST(PathFeasible, MonotoneInSums) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  const ConstraintSet c({}, {{0, 12.0}, {1, 8.0}});
  for (int i = 0; i < 1000; ++i) {
    const MetricAccumulator big = acc({u(rng), u(rng)});
    const MetricAccumulator small = acc({big.sums[0] * u(rng) / 10.0, big.sums[1] * u(rng) / 10.0});
    if (path_feasible(big, c)) {
      EXPECT_TRUE(path_feasible(small, c));
    }
  }
}

TEST(ConstraintSet, DuplicateIndexRejected) {
  try {
    ConstraintSet({{0, 1.0}, {0, 2.0}}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(MetricAccumulator, ExtendAddsComponentwise) {
  MetricAccumulator a(2);
  a.extend(std::vector<double>{1.5, 2.0});
  a.extend(std::vector<double>{0.5, -1.0});
  EXPECT_EQ(a.sums, (std::vector<double>{2.0, 1.0}));
}

TEST(ToAdditive, One) { EXPECT_EQ(to_additive(std::vector<double>{1.0}), std::vector<double>{0.0}); }

TEST(ToAdditive, PowersOfE) {
  const auto out = to_additive(std::vector<double>{std::numbers::e, std::numbers::e * std::numbers::e});
  EXPECT_NEAR(out[0], 1.0, 1e-12);
  EXPECT_NEAR(out[1], 2.0, 1e-12);
}

TEST(ToAdditive, NonPositiveRejected) {
  for (double bad : {0.0, -1.0}) {
    try {
      to_additive(std::vector<double>{0.5, bad});
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNonPositiveValue);
    }
  }
}

// Reliability-style bound: product of per-link values must exceed P, which
// as an upper bound reads -sum(ln m) < -ln P. Compared against the direct
// product on random cases.
TEST(ToAdditive, ProductBoundMatchesDirectProduct) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> link(0.9, 1.0);
  std::uniform_real_distribution<double> bound(0.75, 0.99);
  int agree = 0;
  int tested = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> m = {link(rng), link(rng), link(rng)};
    if (i == 0) m = {0.97, 0.97, 0.97};
    const double p = i == 0 ? 0.9 : bound(rng);
    const double product = m[0] * m[1] * m[2];
    if (std::abs(product - p) < 1e-9 * p) continue;  // too close to call
    MetricAccumulator a(1);
    for (double v : to_additive(m)) a.extend(std::vector<double>{-v});
    const ConstraintSet c({}, {{0, -to_additive(std::vector<double>{p})[0]}});
    ++tested;
    agree += path_feasible(a, c) == (product > p);
  }
  EXPECT_EQ(agree, tested);
  EXPECT_GT(tested, 990);
}

TEST(ConstraintText, ParsesLiterals) {
  const ConstraintSet c = parse_constraints("# slo\nlink 0 >= 5\npath 0 < 5\n\npath 1 < 2.5\n");
  EXPECT_EQ(c.link_bounds(), (std::vector<LinkBound>{{0, 5.0}}));
  EXPECT_EQ(c.path_bounds(), (std::vector<PathBound>{{0, 5.0}, {1, 2.5}}));
  EXPECT_EQ(c.mode(), BoundMode::kStrict);
  EXPECT_EQ(parse_constraints(format_constraints(c)), c);
  EXPECT_EQ(parse_constraints("path 0 <= 5").mode(), BoundMode::kNonStrict);
}

TEST(ConstraintText, RejectsMalformed) {
  for (const char* bad : {"link 0 > 5", "path 0 >= 5", "link x >= 5", "link 0 >= abc", "foo"}) {
    EXPECT_THROW(parse_constraints(bad), Error) << bad;
  }
}

}  // namespace
}  // namespace pathembed
