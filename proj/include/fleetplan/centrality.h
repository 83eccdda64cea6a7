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

// Shortest-path census and betweenness centrality.
//
// Betweenness here is endpoint-inclusive: for every ordered pair (s, t),
// s != t, with t reachable from s, each node v receives
// w(s,t) * sigma_st(v) / sigma_st, where sigma_st(s) = sigma_st(t) =
// sigma_st. The pair weight w is 1 without an OD matrix and OD(s,t) with one.

#ifndef FLEETPLAN_CENTRALITY_H_
#define FLEETPLAN_CENTRALITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fleetplan/network.h"

namespace fleetplan {

enum class WeightMode { kHops, kFreeFlowTime, kCongestedTime };

std::string ToString(WeightMode mode);
// Accepts "hops", "ft", "ct" and the long forms "free_flow_time",
// "congested_time".
WeightMode ParseWeightMode(const std::string& text);

double LinkWeight(const Link& link, WeightMode mode);

// Two path lengths are tied iff |d1 - d2| <= kTieTolerance * max(1, d1).
inline constexpr double kTieTolerance = 1e-9;

struct PathCensus {
  int source = 0;              // node index
  std::vector<double> dist;    // +inf when unreachable
  std::vector<double> sigma;   // number of shortest paths from source
  // Predecessor links of each node on the shortest-path DAG (link indices).
  std::vector<std::vector<int>> pred_links;
  // Reachable nodes in nondecreasing distance; order[0] == source.
  std::vector<int> order;
};

PathCensus ShortestPathCensusAt(const Network& network, int source_index,
                                WeightMode mode);
// Throws InputError when the source is not a node of the network.
PathCensus ShortestPathCensus(const Network& network, NodeId source,
                              WeightMode mode);

struct CentralityScores {
  std::vector<double> scores;  // by node index
  WeightMode mode = WeightMode::kHops;
  bool od_weighted = false;
  std::optional<double> alpha;  // set for blended scores
  // Pairs that carry weight but have no path. Informational only.
  std::int64_t unreachable_pairs = 0;
  double unreachable_demand = 0.0;
};

// `od` may be null: every ordered reachable pair then has weight 1.
// Sources are evaluated on up to `workers` threads; the reduction order is
// fixed, so the result does not depend on the worker count.
CentralityScores Betweenness(const Network& network, WeightMode mode,
                             const ODMatrix* od, int workers = 1);

// alpha * BC_freeflow + (1 - alpha) * BC_congested.
CentralityScores BlendedBetweenness(const Network& network, const ODMatrix* od,
                                    double alpha, int workers = 1);

enum class Grouping { kNone, kStubVsTransit, kRoadType };

Grouping ParseGrouping(const std::string& text);

struct GroupCorrelation {
  std::string group;
  int n = 0;
  std::optional<double> r_squared;  // unset when n < 3 or zero variance
};

// Squared Pearson correlation between score and inbound link flow, per
// group. Grouping by road type keys each node by the largest road_type
// among its inbound links ("none" when it has no inbound link). Stub /
// transit grouping needs `od`.
std::vector<GroupCorrelation> CorrelationReport(const CentralityScores& scores,
                                                const Network& network,
                                                Grouping grouping,
                                                const ODMatrix* od = nullptr);

std::optional<double> PearsonRSquared(const std::vector<double>& x,
                                      const std::vector<double>& y);

}  // namespace fleetplan

#endif  // FLEETPLAN_CENTRALITY_H_
