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


#include "fleetplan/centrality.h"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fleetplan/error.h"
#include "oracles.h"

namespace fleetplan {
namespace {

using testing::MakeLink;

constexpr WeightMode kModes[] = {WeightMode::kHops, WeightMode::kFreeFlowTime,
                                 WeightMode::kCongestedTime};

double Score(const Network& net, const CentralityScores& s, NodeId id) {
  return s.scores[net.IndexOf(id)];
}

Network Diamond(double slow_branch = 1.0) {
  return Network::FromLinks({MakeLink(1, 2), MakeLink(1, 3, slow_branch, slow_branch),
                             MakeLink(2, 4), MakeLink(3, 4)});
}

TEST(PathCensus, DirectedPath) {
  const Network net = Network::FromLinks({MakeLink(1, 2), MakeLink(2, 3)});
  const PathCensus c = ShortestPathCensus(net, 1, WeightMode::kHops);
  EXPECT_EQ(c.sigma[net.IndexOf(3)], 1.0);
  EXPECT_EQ(c.dist[net.IndexOf(3)], 2.0);
  EXPECT_EQ(c.order.front(), net.IndexOf(1));
}

TEST(PathCensus, DiamondTies) {
  const Network net = Diamond();
  const PathCensus c = ShortestPathCensus(net, 1, WeightMode::kFreeFlowTime);
  const int t = net.IndexOf(4);
  EXPECT_EQ(c.sigma[t], 2.0);
  std::vector<NodeId> preds;
  for (const int l : c.pred_links[t]) preds.push_back(net.id(net.tail(l)));
  std::sort(preds.begin(), preds.end());
  EXPECT_EQ(preds, (std::vector<NodeId>{2, 3}));
}

TEST(PathCensus, SlowerBranchBreaksTheTie) {
  const Network net = Diamond(1.5);
  const PathCensus c = ShortestPathCensus(net, 1, WeightMode::kFreeFlowTime);
  EXPECT_EQ(c.sigma[net.IndexOf(4)], 1.0);
  // Hops ignore the times.
  EXPECT_EQ(ShortestPathCensus(net, 1, WeightMode::kHops).sigma[net.IndexOf(4)], 2.0);
}

TEST(PathCensus, TieToleranceIsRelative) {
  const Network near = Network::FromLinks(
      {MakeLink(1, 2, 1000.0), MakeLink(1, 3, 1000.0 + 1e-7), MakeLink(2, 4),
       MakeLink(3, 4)});
  EXPECT_EQ(ShortestPathCensus(near, 1, WeightMode::kFreeFlowTime)
                .sigma[near.IndexOf(4)],
            2.0);
  const Network far = Network::FromLinks(
      {MakeLink(1, 2, 1000.0), MakeLink(1, 3, 1000.0 + 1e-4), MakeLink(2, 4),
       MakeLink(3, 4)});
  EXPECT_EQ(ShortestPathCensus(far, 1, WeightMode::kFreeFlowTime)
                .sigma[far.IndexOf(4)],
            1.0);
}

TEST(PathCensus, UnknownSourceThrows) {
  EXPECT_THROW(ShortestPathCensus(Diamond(), 99, WeightMode::kHops), InputError);
}

TEST(PathCensus, InvariantsOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Network net = testing::RandomNetwork(rng, 3 + trial % 10, 0.3);
    for (const WeightMode mode : kModes) {
      for (int s = 0; s < net.num_nodes(); ++s) {
        const PathCensus c = ShortestPathCensusAt(net, s, mode);
        EXPECT_EQ(c.sigma[s], 1.0);
        EXPECT_EQ(c.dist[s], 0.0);
        for (int v = 0; v < net.num_nodes(); ++v) {
          if (v == s || c.pred_links[v].empty()) continue;
          double sum = 0.0;
          for (const int l : c.pred_links[v]) {
            const int u = net.tail(l);
            const double expect = c.dist[u] + LinkWeight(net.link(l), mode);
            EXPECT_LE(std::abs(c.dist[v] - expect),
                      kTieTolerance * std::max(1.0, c.dist[v]));
            sum += c.sigma[u];
          }
          EXPECT_EQ(c.sigma[v], sum);
        }
      }
    }
  }
}

TEST(PathCensus, SigmaIsScaleInvariant) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Network net = testing::RandomNetwork(rng, 4 + trial % 8, 0.3);
    std::vector<Link> scaled(net.links().begin(), net.links().end());
    for (Link& l : scaled) {
      l.free_flow_min *= 3.7;
      l.congested_min *= 3.7;
    }
    const Network big = Network::Build(
        std::vector<NodeId>(net.ids().begin(), net.ids().end()), scaled);
    for (int s = 0; s < net.num_nodes(); ++s) {
      const PathCensus a = ShortestPathCensusAt(net, s, WeightMode::kFreeFlowTime);
      const PathCensus b = ShortestPathCensusAt(big, s, WeightMode::kFreeFlowTime);
      EXPECT_EQ(a.sigma, b.sigma);
      EXPECT_EQ(a.pred_links, b.pred_links);
    }
  }
}

TEST(Betweenness, DirectedPathCountsEndpoints) {
  const Network net = Network::FromLinks({MakeLink(1, 2), MakeLink(2, 3)});
  const CentralityScores s = Betweenness(net, WeightMode::kHops, nullptr);
  EXPECT_EQ(Score(net, s, 1), 2.0);
  EXPECT_EQ(Score(net, s, 2), 3.0);
  EXPECT_EQ(Score(net, s, 3), 2.0);
}

TEST(Betweenness, DiamondWithOneODPair) {
  const Network net = Diamond();
  const ODMatrix od = ODMatrix::Build(net, {{1, 4, 10.0}});
  const CentralityScores s = Betweenness(net, WeightMode::kFreeFlowTime, &od);
  EXPECT_EQ(Score(net, s, 1), 10.0);
  EXPECT_EQ(Score(net, s, 2), 5.0);
  EXPECT_EQ(Score(net, s, 3), 5.0);
  EXPECT_EQ(Score(net, s, 4), 10.0);
  EXPECT_TRUE(s.od_weighted);
}

TEST(Betweenness, UnitODEqualsUnweighted) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Network net = testing::RandomNetwork(rng, 3 + trial % 9, 0.3);
    const auto dist = testing::AllPairsDistances(net, WeightMode::kHops);
    std::vector<ODEntry> entries;
    for (int s = 0; s < net.num_nodes(); ++s)
      for (int t = 0; t < net.num_nodes(); ++t)
        if (s != t && std::isfinite(dist[s][t]))
          entries.push_back({net.id(s), net.id(t), 1.0});
    if (entries.empty()) continue;
    const ODMatrix od = ODMatrix::Build(net, entries);
    const auto a = Betweenness(net, WeightMode::kHops, nullptr).scores;
    const auto b = Betweenness(net, WeightMode::kHops, &od).scores;
    for (size_t v = 0; v < a.size(); ++v) EXPECT_NEAR(a[v], b[v], 1e-9);
  }
}

TEST(Betweenness, UnreachableDemandIsTallied) {
  const Network net = Network::FromLinks({MakeLink(1, 2), MakeLink(3, 2)});
  const ODMatrix od = ODMatrix::Build(net, {{1, 3, 7.0}, {1, 2, 1.0}});
  const CentralityScores s = Betweenness(net, WeightMode::kHops, &od);
  EXPECT_EQ(s.unreachable_pairs, 1);
  EXPECT_EQ(s.unreachable_demand, 7.0);
  EXPECT_EQ(Score(net, s, 3), 0.0);
}

TEST(Betweenness, MatchesPathEnumeration) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 60; ++trial) {
    const Network net = testing::RandomNetwork(rng, 2 + trial % 11, 0.3);
    const ODMatrix od = testing::RandomOD(rng, net, 0.4);
    for (const WeightMode mode : kModes) {
      for (const ODMatrix* weights : {static_cast<const ODMatrix*>(nullptr), &od}) {
        const auto got = Betweenness(net, mode, weights).scores;
        const auto want = testing::OracleBetweenness(net, mode, weights);
        for (int v = 0; v < net.num_nodes(); ++v) {
          EXPECT_NEAR(got[v], want[v], 1e-9 * std::max(1.0, want[v]))
              << "trial " << trial << " node " << v;
          EXPECT_GE(got[v], 0.0);
        }
      }
    }
  }
}

TEST(Betweenness, ODLinearity) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Network net = testing::RandomNetwork(rng, 4 + trial % 8, 0.35);
    const ODMatrix od1 = testing::RandomOD(rng, net, 0.3);
    const ODMatrix od2 = testing::RandomOD(rng, net, 0.3);
    std::map<std::pair<NodeId, NodeId>, double> sum;
    for (const ODMatrix* od : {&od1, &od2})
      for (const ODEntry& e : od->entries())
        sum[{e.origin, e.destination}] += e.trips_per_hour;
    std::vector<ODEntry> entries;
    for (const auto& [key, trips] : sum) entries.push_back({key.first, key.second, trips});
    const ODMatrix both = ODMatrix::Build(net, entries);
    const auto a = Betweenness(net, WeightMode::kCongestedTime, &od1).scores;
    const auto b = Betweenness(net, WeightMode::kCongestedTime, &od2).scores;
    const auto c = Betweenness(net, WeightMode::kCongestedTime, &both).scores;
    for (size_t v = 0; v < c.size(); ++v) EXPECT_NEAR(c[v], a[v] + b[v], 1e-9);
  }
}

TEST(Betweenness, WorkerCountDoesNotChangeBits) {
  const Network net = LoadNetworkFile(testing::FixturePath("synthetic_links.csv"));
  const ODMatrix od = LoadODMatrixFile(testing::FixturePath("synthetic_od.csv"), net);
  const auto one = Betweenness(net, WeightMode::kCongestedTime, &od, 1).scores;
  for (const int workers : {2, 3, 8}) {
    EXPECT_EQ(Betweenness(net, WeightMode::kCongestedTime, &od, workers).scores, one);
  }
  const auto blended = BlendedBetweenness(net, &od, 0.25, 1).scores;
  EXPECT_EQ(BlendedBetweenness(net, &od, 0.25, 4).scores, blended);
}

TEST(BlendedBetweenness, EndpointIdentitiesAndDefaultBlend) {
  const Network net = LoadNetworkFile(testing::FixturePath("grid10_links.csv"));
  const ODMatrix od = LoadODMatrixFile(testing::FixturePath("grid10_od.csv"), net);
  const auto ft = Betweenness(net, WeightMode::kFreeFlowTime, &od).scores;
  const auto ct = Betweenness(net, WeightMode::kCongestedTime, &od).scores;
  EXPECT_EQ(BlendedBetweenness(net, &od, 1.0).scores, ft);
  EXPECT_EQ(BlendedBetweenness(net, &od, 0.0).scores, ct);
  const CentralityScores mix = BlendedBetweenness(net, &od, 0.25);
  ASSERT_TRUE(mix.alpha.has_value());
  for (int v = 0; v < net.num_nodes(); ++v) {
    EXPECT_NEAR(mix.scores[v], 0.25 * ft[v] + 0.75 * ct[v], 1e-12 * (1.0 + ct[v]));
  }
  EXPECT_THROW(BlendedBetweenness(net, &od, 1.5), InputError);
  EXPECT_THROW(BlendedBetweenness(net, &od, -0.1), InputError);
}

TEST(WeightMode, Parsing) {
  EXPECT_EQ(ParseWeightMode("hops"), WeightMode::kHops);
  EXPECT_EQ(ParseWeightMode("ft"), WeightMode::kFreeFlowTime);
  EXPECT_EQ(ParseWeightMode("congested_time"), WeightMode::kCongestedTime);
  EXPECT_THROW(ParseWeightMode("miles"), InputError);
}

TEST(Correlation, PearsonExamples) {
  const std::vector<double> flows = {1.0, 4.0, 2.0, 8.0};
  std::vector<double> proportional;
  for (const double f : flows) proportional.push_back(3.0 * f);
  EXPECT_NEAR(PearsonRSquared(proportional, flows).value(), 1.0, 1e-12);
  EXPECT_FALSE(PearsonRSquared(proportional, {5.0, 5.0, 5.0, 5.0}).has_value());
  EXPECT_FALSE(PearsonRSquared({1.0, 2.0}, {2.0, 1.0}).has_value());
  // x = 1,2,3,4 and y = 1,3,2,4: r = 0.8.
  EXPECT_NEAR(PearsonRSquared({1, 2, 3, 4}, {1, 3, 2, 4}).value(), 0.64, 1e-12);
}

TEST(Correlation, GroupsByRoadTypeAndKind) {
  // Inbound flows per node: 2 <- 10 (type 1), 3 <- 20 (type 2), 4 <- 30 + 5.
  std::vector<Link> links = {MakeLink(1, 2, 1, 1, 10.0), MakeLink(1, 3, 1, 1, 20.0),
                             MakeLink(2, 4, 1, 1, 30.0), MakeLink(3, 4, 1, 1, 5.0)};
  links[1].road_type = 2;
  links[3].road_type = 3;
  const Network net = Network::FromLinks(links);
  CentralityScores scores;
  scores.scores = {1.0, 2.0, 3.0, 4.0};
  const auto by_type = CorrelationReport(scores, net, Grouping::kRoadType);
  std::map<std::string, int> sizes;
  for (const GroupCorrelation& g : by_type) {
    sizes[g.group] = g.n;
    EXPECT_FALSE(g.r_squared.has_value());
  }
  EXPECT_EQ(sizes["none"], 1);
  EXPECT_EQ(sizes["type:1"], 1);
  EXPECT_EQ(sizes["type:2"], 1);
  EXPECT_EQ(sizes["type:3"], 1);

  const auto all = CorrelationReport(scores, net, Grouping::kNone);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].n, 4);
  EXPECT_NEAR(all[0].r_squared.value(),
              PearsonRSquared({1, 2, 3, 4}, {0, 10, 20, 35}).value(), 1e-15);

  EXPECT_THROW(CorrelationReport(scores, net, Grouping::kStubVsTransit), InputError);
  const ODMatrix od = ODMatrix::Build(net, {{1, 4, 1.0}});
  int total = 0;
  for (const auto& g : CorrelationReport(scores, net, Grouping::kStubVsTransit, &od)) {
    total += g.n;
  }
  EXPECT_EQ(total, 4);
}

}  // namespace
}  // namespace fleetplan
