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
#include <string>
#include <vector>

#include "pathembed/error.hpp"
#include "pathembed/experiment.hpp"
#include "pathembed/text.hpp"

namespace pathembed {
namespace {

SweepSpec small_steering() {
  return parse_config(
             "scenario = steering\n"
             "nodes = 40\n"
             "pairs = 5\n"
             "degrees = 3, 4\n"
             "bw_levels = low, high\n"
             "delay_levels = high\n"
             "backends = nm-l1, edijkstra\n"
             "seeds = 1..3\n")
      .sweeps.at(0);
}

std::string config_error_text(std::string_view text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfigError);
    return e.what();
  }
  return "no error";
}

TEST(Sweep, Cardinality) {
  const SweepSpec spec = small_steering();
  EXPECT_EQ(spec.cell_count(), 24u);
  const auto rows = sweep(spec);
  ASSERT_EQ(rows.size(), 24u);
  // Grid order: degree, bw level, delay level, backend, seed.
  EXPECT_EQ(rows[0].avg_degree, 3.0);
  EXPECT_EQ(rows[0].bw_level, "low");
  EXPECT_EQ(rows[0].backend, "nm-l1");
  EXPECT_EQ(rows[0].seed, 1u);
  EXPECT_EQ(rows[1].seed, 2u);
  EXPECT_EQ(rows[3].backend, "edijkstra");
  EXPECT_EQ(rows[6].bw_level, "high");
  EXPECT_EQ(rows[12].avg_degree, 4.0);
}

TEST(Sweep, DeterministicAcrossRunsAndJobCounts) {
  const SweepSpec spec = small_steering();
  const std::string a = format_csv(sweep(spec, 1));
  EXPECT_EQ(a, format_csv(sweep(spec, 1)));
  EXPECT_EQ(a, format_csv(sweep(spec, 3)));
}

TEST(Sweep, CsvSchema) {
  SweepSpec spec = small_steering();
  spec.seeds = {1};
  spec.degrees = {4};
  spec.bw_levels = {Severity::kLow};
  const std::string csv = format_csv(sweep(spec));
  const auto lines = split_lines(csv);
  ASSERT_GE(lines.size(), 2u);
  EXPECT_EQ(lines[0], kCsvHeader);
  // VNE columns empty; timing off leaves avg_us empty.
  const auto fields = split(lines[1], ',');
  ASSERT_EQ(fields.size(), 15u);
  EXPECT_EQ(fields[0], "waxman");
  EXPECT_EQ(fields[1], "40");
  EXPECT_EQ(fields[7], "");
  EXPECT_EQ(fields[8], "");
  EXPECT_EQ(fields[9], "");
  EXPECT_NE(fields[10], "");
  EXPECT_EQ(fields[13], "");
}

TEST(Sweep, VneRows) {
  const SweepSpec spec = parse_config(
                             "scenario = vne\nnodes = 40\nrequests = 4\nvn_nodes = 5\n"
                             "backends = nm-general, ksp:1\nseeds = 1, 2\n")
                             .sweeps.at(0);
  const auto rows = sweep(spec);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.vn_alloc_ratio && r.link_alloc_ratio && r.link_util);
    EXPECT_FALSE(r.throughput_gbps);
    EXPECT_EQ(r.bw_level, "");
  }
}

TEST(Sweep, DelayPercentGrid) {
  EXPECT_EQ(percent_grid(400, 50, 50),
            (std::vector<double>{400, 350, 300, 250, 200, 150, 100, 50}));
  const SweepSpec spec = parse_config(
                             "nodes = 30\npairs = 3\nbackends = nm-l1\n"
                             "delay_percents = 400..50:50\n")
                             .sweeps.at(0);
  EXPECT_EQ(spec.delay_percents.size(), 8u);
  const auto rows = sweep(spec);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0].delay_level, "400");
  EXPECT_EQ(rows[7].plot_x, 50.0);
}

TEST(Sweep, PlotDataFiles) {
  const auto files = format_plot_data(sweep(small_steering()));
  for (const char* name : {"throughput_nm-l1.dat", "energy_edijkstra.dat", "hops_nm-l1.dat"}) {
    EXPECT_TRUE(files.count(name)) << name;
  }
  EXPECT_FALSE(files.count("time_us_nm-l1.dat"));  // timing off
  const std::string& t = files.at("throughput_nm-l1.dat");
  EXPECT_NE(t.find("# waxman bw=low delay=high"), std::string::npos);
  EXPECT_NE(t.find("\n3 "), std::string::npos);
  EXPECT_NE(t.find("\n4 "), std::string::npos);

  SweepRow r;
  r.backend = "ksp:3";
  r.vn_alloc_ratio = 1.0;
  EXPECT_TRUE(format_plot_data({r}).count("vn_alloc_ksp_3.dat"));
}

TEST(Config, SectionsInheritTopLevel) {
  const auto cfg = parse_config(
      "output = out.csv\nnodes = 50\nseeds = 1..2\n"
      "[sweep]\nscenario = vne\n"
      "[sweep]\nbackends = nm-l1\nseeds = 9\n");
  ASSERT_EQ(cfg.sweeps.size(), 2u);
  EXPECT_EQ(cfg.output, std::filesystem::path("out.csv"));
  EXPECT_EQ(cfg.sweeps[0].scenario, Scenario::kVne);
  EXPECT_EQ(cfg.sweeps[0].seeds, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(cfg.sweeps[0].effective_nodes(), 50u);
  EXPECT_EQ(cfg.sweeps[1].scenario, Scenario::kSteering);
  EXPECT_EQ(cfg.sweeps[1].seeds, (std::vector<std::uint64_t>{9}));
  EXPECT_EQ(cfg.sweeps[1].backends, (std::vector<std::string>{"nm-l1"}));
}

TEST(Config, ScaleDefaults) {
  const auto desk = parse_config("scenario = steering\n").sweeps.at(0);
  EXPECT_EQ(desk.effective_nodes(), 1000u);
  EXPECT_EQ(desk.effective_pairs(), 100u);
  const auto paper = parse_config("scenario = steering\nscale = paper\n").sweeps.at(0);
  EXPECT_EQ(paper.effective_nodes(), 10000u);
  EXPECT_EQ(paper.effective_pairs(), 1000u);
  EXPECT_EQ(parse_config("scenario = vne\n").sweeps.at(0).effective_nodes(), 100u);
}

TEST(Config, ErrorsNameTheKey) {
  EXPECT_EQ(config_error_text("colour = blue\n").rfind("colour", 0), 0u);
  EXPECT_EQ(config_error_text("backends = nm-l1, dijkstra\n").rfind("backends", 0), 0u);
  EXPECT_EQ(config_error_text("bw_levels = extreme\n").rfind("bw_levels", 0), 0u);
  EXPECT_EQ(config_error_text("seeds = one\n").rfind("seeds", 0), 0u);
  EXPECT_EQ(config_error_text("scenario = batch\n").rfind("scenario", 0), 0u);
  EXPECT_EQ(config_error_text("[sweep]\nmodels = ring\n").rfind("models", 0), 0u);
  EXPECT_NE(config_error_text("alpha = 0\n").find("alpha"), std::string::npos);
  EXPECT_EQ(config_error_text("just words\n").rfind("line 1", 0), 0u);
  EXPECT_EQ(config_error_text("[other]\n").rfind("line 1", 0), 0u);
}

}  // namespace
}  // namespace pathembed
