// Copyright 2026 The fleetplan Authors.
//
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


#include "fleetplan/placement.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fleetplan/error.h"
#include "oracles.h"

namespace fleetplan {
namespace {

struct Instance {
  Network net;
  ODMatrix od;
};

// Small random instance with at least one reachable OD pair.
Instance RandomInstance(std::mt19937_64& rng, int n) {
  while (true) {
    Network net = testing::RandomNetwork(rng, n, 0.35);
    ODMatrix od = testing::RandomOD(rng, net, 0.4);
    const auto dist = testing::AllPairsDistances(net, WeightMode::kCongestedTime);
    for (const ODEntry& e : od.entries()) {
      if (std::isfinite(dist[net.IndexOf(e.origin)][net.IndexOf(e.destination)])) {
        return {std::move(net), std::move(od)};
      }
    }
  }
}

double BestSubsetValue(const Network& net, const ODMatrix& od, WeightMode mode,
                       int k) {
  double best = 0.0;
  testing::ForEachSubset(net.num_nodes(), k, [&](const std::vector<int>& s) {
    best = std::max(best, testing::OracleGroupValue(net, od, mode, s));
  });
  return best;
}

Instance Fixture(const std::string& stem) {
  Network net = LoadNetworkFile(testing::FixturePath(stem + "_links.csv"));
  ODMatrix od = LoadODMatrixFile(testing::FixturePath(stem + "_od.csv"), net);
  return {std::move(net), std::move(od)};
}

TEST(GroupValue, EmptyAndFullGroups) {
  const Instance in = Fixture("grid10");
  const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kCongestedTime);
  EXPECT_EQ(eval.Value({}), 0.0);
  std::vector<int> all(in.net.num_nodes());
  for (int v = 0; v < in.net.num_nodes(); ++v) all[v] = v;
  EXPECT_NEAR(eval.Value(all), in.od.total_demand(), 1e-9 * in.od.total_demand());
}

TEST(GroupValue, SingletonEqualsODBetweenness) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance in = RandomInstance(rng, 3 + trial % 9);
    const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kFreeFlowTime);
    const auto bc = Betweenness(in.net, WeightMode::kFreeFlowTime, &in.od).scores;
    for (int v = 0; v < in.net.num_nodes(); ++v) {
      const int member[] = {v};
      EXPECT_NEAR(eval.Value(member), bc[v], 1e-9 * std::max(1.0, bc[v]));
    }
  }
}

TEST(GroupValue, MatchesPathEnumeration) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance in = RandomInstance(rng, 3 + trial % 10);
    const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kCongestedTime);
    std::uniform_int_distribution<int> pick(0, in.net.num_nodes() - 1);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<int> group = {pick(rng), pick(rng), pick(rng)};
      const double want =
          testing::OracleGroupValue(in.net, in.od, WeightMode::kCongestedTime, group);
      EXPECT_NEAR(eval.Value(group), want, 1e-9 * std::max(1.0, want));
    }
  }
}

TEST(GroupValue, DuplicatesAreIgnoredAndNamedApiAgrees) {
  const Instance in = Fixture("grid8");
  const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kHops);
  const int twice[] = {2, 2, 5};
  const int once[] = {2, 5};
  EXPECT_EQ(eval.Value(twice), eval.Value(once));
  const NodeId ids[] = {in.net.id(2), in.net.id(5)};
  EXPECT_NEAR(GroupBetweenness(in.net, in.od, ids, WeightMode::kHops), eval.Value(once),
              1e-12 * eval.Value(once));
}

TEST(GroupValue, EmptyODThrows) {
  const Instance in = Fixture("grid8");
  EXPECT_THROW(GroupCoverageEvaluator(in.net, ODMatrix::Build(in.net, {}),
                                      WeightMode::kHops),
               InputError);
}

TEST(GroupValue, MonotoneAndSubmodular) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance in = RandomInstance(rng, 4 + trial % 8);
    const int n = in.net.num_nodes();
    const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kCongestedTime);
    std::bernoulli_distribution coin(0.3);
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<int> a, b;
      for (int v = 0; v < n; ++v) {
        if (coin(rng)) {
          a.push_back(v);
          b.push_back(v);
        } else if (coin(rng)) {
          b.push_back(v);
        }
      }
      const double va = eval.Value(a), vb = eval.Value(b);
      EXPECT_LE(va, vb + 1e-9);
      const auto gain_a = eval.MarginalGains(a);
      const auto gain_b = eval.MarginalGains(b);
      for (int x = 0; x < n; ++x) {
        if (std::find(b.begin(), b.end(), x) != b.end()) {
          EXPECT_EQ(gain_b[x], 0.0);
          continue;
        }
        EXPECT_GE(gain_a[x], gain_b[x] - 1e-9);
        std::vector<int> bx = b;
        bx.push_back(x);
        EXPECT_NEAR(gain_b[x], eval.Value(bx) - vb, 1e-9 * std::max(1.0, vb));
      }
    }
  }
}

TEST(Greedy, StarPicksTheCenter) {
  const Instance in = Fixture("star");
  const auto steps = GreedyPlacement(in.net, in.od, 1, WeightMode::kCongestedTime);
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_EQ(steps[0].node, 0);
  EXPECT_NEAR(steps[0].cumulative, in.od.total_demand(), 1e-9);
}

TEST(Greedy, AllNodesReachTotalDemand) {
  const Instance in = Fixture("grid10");
  const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kCongestedTime);
  const auto steps = GreedyPlacement(eval, in.net.num_nodes());
  EXPECT_NEAR(steps.back().cumulative, in.od.total_demand(),
              1e-9 * in.od.total_demand());
  EXPECT_THROW(GreedyPlacement(eval, 0), InputError);
  EXPECT_THROW(GreedyPlacement(eval, in.net.num_nodes() + 1), InputError);
}

TEST(Greedy, LazyAndEagerAgreeAndGainsAreExact) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    const Instance in = RandomInstance(rng, 4 + trial % 9);
    const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kCongestedTime);
    const int k = std::min(4, in.net.num_nodes());
    const auto lazy = GreedyPlacement(eval, k, true);
    const auto eager = GreedyPlacement(eval, k, false);
    ASSERT_EQ(lazy.size(), eager.size());
    std::vector<int> chosen;
    double previous = 0.0;
    for (size_t i = 0; i < lazy.size(); ++i) {
      EXPECT_EQ(lazy[i].node, eager[i].node);
      chosen.push_back(in.net.IndexOf(lazy[i].node));
      const double value = eval.Value(chosen);
      EXPECT_NEAR(lazy[i].cumulative, value, 1e-9 * std::max(1.0, value));
      EXPECT_NEAR(lazy[i].marginal_gain, value - previous, 1e-9 * std::max(1.0, value));
      // No other node would have gained more.
      std::vector<int> before(chosen.begin(), chosen.end() - 1);
      const auto gains = eval.MarginalGains(before);
      for (int x = 0; x < in.net.num_nodes(); ++x) {
        EXPECT_LE(gains[x], lazy[i].marginal_gain + 1e-9 * std::max(1.0, value));
      }
      previous = value;
    }
  }
}

TEST(Greedy, TiesGoToLowestId) {
  // Two disjoint, identical pairs: both origins tie on the first pick.
  const Network net = Network::FromLinks(
      {testing::MakeLink(5, 6), testing::MakeLink(1, 2)});
  const ODMatrix od = ODMatrix::Build(net, {{5, 6, 10.0}, {1, 2, 10.0}});
  const auto steps = GreedyPlacement(net, od, 2, WeightMode::kHops);
  EXPECT_EQ(steps[0].node, 1);
  EXPECT_EQ(steps[1].node, 5);
}

TEST(Greedy, WithinApproximationFactorOfOptimum) {
  const double factor = 1.0 - 1.0 / std::numbers::e;
  for (const char* stem : {"grid8", "grid10", "star"}) {
    const Instance in = Fixture(stem);
    for (int k = 1; k <= 4; ++k) {
      const double opt = BestSubsetValue(in.net, in.od, WeightMode::kCongestedTime, k);
      const auto steps = GreedyPlacement(in.net, in.od, k, WeightMode::kCongestedTime);
      EXPECT_GE(steps.back().cumulative, factor * opt - 1e-9) << stem << " k=" << k;
      EXPECT_LE(steps.back().cumulative, opt + 1e-9 * opt);
    }
  }
}

TEST(ExactSearch, MatchesExhaustiveOptimum) {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 15; ++trial) {
    const Instance in = RandomInstance(rng, 5 + trial % 8);
    const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kCongestedTime);
    for (const int k : {1, 2, 3}) {
      const double opt = BestSubsetValue(in.net, in.od, WeightMode::kCongestedTime, k);
      for (const SearchAlgorithm algo :
           {SearchAlgorithm::kDfbnb, SearchAlgorithm::kPotential}) {
        const SearchResult r = ExactPlacement(eval, k, algo, 60.0);
        EXPECT_TRUE(r.completed);
        EXPECT_EQ(r.certificate, 1.0);
        EXPECT_NEAR(r.group.gbc_value, opt, 1e-9 * std::max(1.0, opt));
        EXPECT_LE(r.group.members.size(), static_cast<size_t>(k));
      }
    }
  }
}

TEST(ExactSearch, SingletonIsTheBestNode) {
  const Instance in = Fixture("grid10");
  const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kCongestedTime);
  const auto bc = Betweenness(in.net, WeightMode::kCongestedTime, &in.od).scores;
  const SearchResult r = ExactPlacement(eval, 1, SearchAlgorithm::kDfbnb, 10.0);
  EXPECT_EQ(r.certificate, 1.0);
  EXPECT_NEAR(r.group.gbc_value, *std::max_element(bc.begin(), bc.end()), 1e-9);
}

TEST(ExactSearch, TinyBudgetIsHonest) {
  const Instance in = Fixture("grid10");
  const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kCongestedTime);
  const double opt = BestSubsetValue(in.net, in.od, WeightMode::kCongestedTime, 3);
  for (const SearchAlgorithm algo :
       {SearchAlgorithm::kDfbnb, SearchAlgorithm::kPotential}) {
    const SearchResult r = ExactPlacement(eval, 3, algo, 1e-3);
    EXPECT_LE(r.certificate, 1.0);
    EXPECT_GT(r.certificate, 0.0);
    EXPECT_LE(r.group.gbc_value, opt + 1e-9);
    EXPECT_GE(r.upper_bound, opt - 1e-9);
    EXPECT_LE(r.certificate, r.group.gbc_value / opt + 1e-12);
    if (!r.completed) EXPECT_LT(r.certificate, 1.0 + 1e-15);
  }
}

TEST(ExactSearch, RejectsBadArguments) {
  const Instance in = Fixture("grid8");
  const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kHops);
  EXPECT_THROW(ExactPlacement(eval, 0, SearchAlgorithm::kDfbnb, 1.0), InputError);
  EXPECT_THROW(ExactPlacement(eval, 2, SearchAlgorithm::kDfbnb, 0.0), InputError);
  EXPECT_THROW(ExactPlacement(eval, 99, SearchAlgorithm::kPotential, 1.0), InputError);
}

TEST(RandomBaseline, DeterministicAndFullCoverageAtAllNodes) {
  const Instance in = Fixture("grid10");
  const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kCongestedTime);
  const auto a = RandomPlacement(eval, 3, 77, 20);
  const auto b = RandomPlacement(eval, 3, 77, 20);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.values.size(), 20u);
  EXPECT_NE(RandomPlacement(eval, 3, 78, 20).values, a.values);
  const auto all = RandomPlacement(eval, in.net.num_nodes(), 5, 4);
  EXPECT_NEAR(all.mean_coverage, 1.0, 1e-12);
  EXPECT_THROW(RandomPlacement(eval, 3, 1, 0), InputError);
  EXPECT_THROW(RandomPlacement(eval, in.net.num_nodes() + 1, 1, 1), InputError);
}

TEST(TopBetweenness, StarPicksTheCenter) {
  const Instance in = Fixture("star");
  const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kCongestedTime);
  const MonitorGroup g =
      TopBetweennessPlacement(eval, in.od, 1, WeightMode::kCongestedTime, 0.25);
  EXPECT_EQ(g.members, (std::vector<NodeId>{0}));
  EXPECT_NEAR(g.coverage_fraction, 1.0, 1e-12);
}

TEST(CoverageCurve, ShapesAndDominance) {
  for (const char* stem : {"grid8", "grid10", "synthetic"}) {
    const Instance in = Fixture(stem);
    const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kCongestedTime);
    const int k_max = std::min(in.net.num_nodes(), 12);
    const CoverageCurve greedy =
        BuildCoverageCurve(eval, in.od, CurveScheme::kGbcGreedy, k_max);
    const CoverageCurve topk = BuildCoverageCurve(eval, in.od, CurveScheme::kBcTopK, k_max);
    ASSERT_EQ(greedy.points.size(), static_cast<size_t>(k_max));
    for (size_t i = 0; i < greedy.points.size(); ++i) {
      EXPECT_EQ(greedy.points[i].n, static_cast<int>(i) + 1);
      EXPECT_GE(greedy.points[i].coverage, topk.points[i].coverage - 1e-12) << stem;
      if (i > 0) {
        EXPECT_GE(greedy.points[i].coverage, greedy.points[i - 1].coverage);
        EXPECT_GE(topk.points[i].coverage, topk.points[i - 1].coverage);
      }
      EXPECT_LE(greedy.points[i].coverage, 1.0 + 1e-12);
    }
  }
}

TEST(CoverageCurve, EveryNodeMeansFullCoverage) {
  const Instance in = Fixture("grid8");
  const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kCongestedTime);
  const int n = in.net.num_nodes();
  for (const CurveScheme s :
       {CurveScheme::kGbcGreedy, CurveScheme::kBcTopK, CurveScheme::kRandom}) {
    const CoverageCurve c = BuildCoverageCurve(eval, in.od, s, n);
    EXPECT_NEAR(c.points.back().coverage, 1.0, 1e-12) << ToString(s);
  }
}

TEST(CoverageCurve, RandomFirstPointMatchesMeanSingleton) {
  const Instance in = Fixture("grid10");
  const GroupCoverageEvaluator eval(in.net, in.od, WeightMode::kCongestedTime);
  const int n = in.net.num_nodes();
  std::vector<double> singles;
  for (int v = 0; v < n; ++v) {
    const int member[] = {v};
    singles.push_back(eval.Value(member) / in.od.total_demand());
  }
  double mean = 0.0, var = 0.0;
  for (const double s : singles) mean += s / n;
  for (const double s : singles) var += (s - mean) * (s - mean) / n;
  CurveConfig config;
  config.repetitions = 100;
  config.seed = 9;
  const CoverageCurve c = BuildCoverageCurve(eval, in.od, CurveScheme::kRandom, 5, config);
  EXPECT_LE(std::abs(c.points[0].coverage - mean), 3.0 * std::sqrt(var / 100.0));
  // Averaged over many repetitions the random curve is monotone.
  for (size_t i = 1; i < c.points.size(); ++i) {
    EXPECT_GE(c.points[i].coverage, c.points[i - 1].coverage);
  }
}

}  // namespace
}  // namespace fleetplan
