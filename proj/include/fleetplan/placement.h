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

// Monitor placement by group betweenness.
//
// The group value of a node set M is
//
//   GBC(M) = sum over OD pairs (s,t) of OD(s,t) * sigma_st(M) / sigma_st
//
// where sigma_st(M) counts shortest s->t paths touching at least one member
// of M, endpoints included. It is the hourly number of distinct vehicles
// passing at least one monitor.

#ifndef FLEETPLAN_PLACEMENT_H_
#define FLEETPLAN_PLACEMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fleetplan/centrality.h"
#include "fleetplan/network.h"

namespace fleetplan {

// Caches the shortest-path DAG of every OD origin so that group values can
// be evaluated repeatedly without re-running shortest paths. Immutable after
// construction; safe for concurrent reads.
class GroupCoverageEvaluator {
 public:
  // Throws InputError when `od` is empty.
  GroupCoverageEvaluator(const Network& network, const ODMatrix& od,
                         WeightMode mode, int workers = 1);

  const Network& network() const { return *network_; }
  int num_nodes() const { return network_->num_nodes(); }
  double total_demand() const { return total_demand_; }
  WeightMode mode() const { return mode_; }

  // GBC of a set of node indices. Duplicates are ignored.
  double Value(std::span<const int> members) const;

  // Value(members + {x}) - Value(members) for every node x, computed in one
  // pass over the DAGs. Zero for members. Mathematically exact; differs from
  // the difference of two Value() calls only by rounding.
  std::vector<double> MarginalGains(std::span<const int> members) const;

  // Shortest-path DAG rooted at an OD origin, relabelled by settle order.
  struct OriginDag {
    int source = 0;                 // node index
    std::vector<int> nodes;         // settle order; nodes[0] == source
    std::vector<int> pred_offsets;  // CSR into preds, by position
    std::vector<int> preds;         // positions
    std::vector<double> sigma;      // by position
    std::vector<std::pair<int, double>> targets;  // (position, trips)
  };
  std::span<const OriginDag> dags() const { return dags_; }

 private:
  double OriginValue(const OriginDag& dag, const std::vector<char>& member,
                     std::vector<double>& avoid) const;

  const Network* network_;
  WeightMode mode_;
  int workers_;
  double total_demand_ = 0.0;
  std::vector<OriginDag> dags_;
};

struct MonitorGroup {
  std::vector<NodeId> members;  // ascending
  double gbc_value = 0.0;       // vehicles / hour
  double coverage_fraction = 0.0;
};

MonitorGroup MakeMonitorGroup(const GroupCoverageEvaluator& evaluator,
                              std::vector<int> member_indices);

double GroupBetweenness(const Network& network, const ODMatrix& od,
                        std::span<const NodeId> group, WeightMode mode);

struct GreedyStep {
  NodeId node = 0;
  double marginal_gain = 0.0;
  double cumulative = 0.0;
};

// Picks, k times, the node with the largest exact marginal gain
// (Value(S + x) - Value(S)); ties go to the lowest node id. Lazy evaluation
// of stale gains only skips candidates that provably cannot win, so
// `lazy` never changes the result. Throws InputError unless
// 1 <= k <= num_nodes.
std::vector<GreedyStep> GreedyPlacement(const GroupCoverageEvaluator& evaluator,
                                        int k, bool lazy = true);
std::vector<GreedyStep> GreedyPlacement(const Network& network,
                                        const ODMatrix& od, int k,
                                        WeightMode mode);

enum class SearchAlgorithm { kDfbnb, kPotential };

struct SearchResult {
  MonitorGroup group;
  double certificate = 1.0;  // best / upper bound, in (0, 1]
  double upper_bound = 0.0;
  double elapsed_s = 0.0;
  bool completed = false;
  std::int64_t expansions = 0;
  SearchAlgorithm algorithm = SearchAlgorithm::kDfbnb;
};

std::string ToString(SearchAlgorithm algorithm);

// Exact maximisation of GBC over groups of size k, as an anytime search.
// Candidates are nodes with nonzero singleton value, ordered by descending
// singleton value. Each search node (S, next candidate) is bounded by
// Value(S) plus the k - |S| largest marginal gains among the remaining
// candidates, which is admissible because GBC is submodular. The greedy
// solution seeds the incumbent. When the wall-clock budget runs out the
// result carries completed = false and certificate = best / bound over
// all unexplored nodes. Throws InputError if k < 1, k > num_nodes or
// time_budget_s <= 0.
SearchResult ExactPlacement(const GroupCoverageEvaluator& evaluator, int k,
                            SearchAlgorithm algorithm, double time_budget_s);

// Mean over repetitions of the GBC of k nodes drawn uniformly without
// replacement. Repetition r uses the stream (seed, r).
struct RandomBaselineResult {
  double mean_value = 0.0;
  double mean_coverage = 0.0;
  std::vector<double> values;
  std::uint64_t seed = 0;
};

RandomBaselineResult RandomPlacement(const GroupCoverageEvaluator& evaluator,
                                     int k, std::uint64_t seed,
                                     int repetitions);

// Node indices sorted by descending score, ties by ascending id.
std::vector<int> RankByScore(const CentralityScores& scores);

// The k highest-scoring nodes of OD betweenness in `mode`, or of the blended
// free-flow / congested betweenness when alpha is set.
MonitorGroup TopBetweennessPlacement(const GroupCoverageEvaluator& evaluator,
                                     const ODMatrix& od, int k,
                                     WeightMode mode,
                                     std::optional<double> alpha);

enum class CurveScheme { kGbcGreedy, kBcTopK, kRandom };

std::string ToString(CurveScheme scheme);
CurveScheme ParseCurveScheme(const std::string& text);

struct CurveConfig {
  WeightMode bc_mode = WeightMode::kCongestedTime;  // for kBcTopK
  std::optional<double> alpha = 0.25;               // for kBcTopK
  std::uint64_t seed = 1;                           // for kRandom
  int repetitions = 30;                             // for kRandom
};

struct CoveragePoint {
  int n = 0;
  double coverage = 0.0;
};

struct CoverageCurve {
  std::vector<CoveragePoint> points;
  CurveScheme scheme = CurveScheme::kGbcGreedy;
};

// Coverage fraction at n = 1..k_max. Greedy and top-k curves are nested
// prefixes; the random curve averages nested prefixes of one random
// permutation per repetition.
CoverageCurve BuildCoverageCurve(const GroupCoverageEvaluator& evaluator,
                                 const ODMatrix& od, CurveScheme scheme,
                                 int k_max, const CurveConfig& config = {});

}  // namespace fleetplan

#endif  // FLEETPLAN_PLACEMENT_H_
