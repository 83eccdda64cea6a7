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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <utility>

#include "fleetplan/error.h"
#include "parallel.h"

namespace fleetplan {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Sources per reduction block. Fixed so that partial sums are always added
// in the same order.
constexpr int kSourceBlock = 64;

bool Tied(double a, double b) {
  return std::abs(a - b) <= kTieTolerance * std::max(1.0, a);
}

// Endpoint-inclusive dependency accumulation for one source. `weight[t]` is
// the pair weight of (source, t); adds into `out`.
void AccumulateSource(const Network& network, const PathCensus& census,
                      const std::vector<double>& weight,
                      std::vector<double>& delta, std::vector<double>& out) {
  for (int v : census.order) delta[v] = 0.0;
  for (auto it = census.order.rbegin(); it != census.order.rend(); ++it) {
    const int w = *it;
    const double carry = (w == census.source ? 0.0 : weight[w]) + delta[w];
    for (int e : census.pred_links[w]) {
      const int u = network.tail(e);
      delta[u] += census.sigma[u] / census.sigma[w] * carry;
    }
  }
  for (int v : census.order) {
    // delta[source] already equals the total weight of reachable targets.
    out[v] += delta[v] + (v == census.source ? 0.0 : weight[v]);
  }
}

}  // namespace

std::string ToString(WeightMode mode) {
  switch (mode) {
    case WeightMode::kHops:
      return "hops";
    case WeightMode::kFreeFlowTime:
      return "ft";
    case WeightMode::kCongestedTime:
      return "ct";
  }
  return "?";
}

WeightMode ParseWeightMode(const std::string& text) {
  if (text == "hops") return WeightMode::kHops;
  if (text == "ft" || text == "free_flow_time") return WeightMode::kFreeFlowTime;
  if (text == "ct" || text == "congested_time") {
    return WeightMode::kCongestedTime;
  }
  throw InputError("unknown weight mode '" + text + "' (hops|ft|ct)");
}

double LinkWeight(const Link& link, WeightMode mode) {
  switch (mode) {
    case WeightMode::kHops:
      return 1.0;
    case WeightMode::kFreeFlowTime:
      return link.free_flow_min;
    case WeightMode::kCongestedTime:
      return link.congested_min;
  }
  return 1.0;
}

PathCensus ShortestPathCensusAt(const Network& network, int source_index,
                                WeightMode mode) {
  const int n = network.num_nodes();
  if (source_index < 0 || source_index >= n) {
    throw InputError("source index out of range");
  }
  PathCensus c;
  c.source = source_index;
  c.dist.assign(n, kInf);
  c.sigma.assign(n, 0.0);
  c.pred_links.assign(n, {});
  c.dist[source_index] = 0.0;
  c.sigma[source_index] = 1.0;

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  std::vector<char> settled(n, 0);
  heap.emplace(0.0, source_index);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    c.order.push_back(u);
    for (int e : network.out_links(u)) {
      const int v = network.head(e);
      if (settled[v]) continue;
      const double w = LinkWeight(network.link(e), mode);
      if (!(w > 0.0)) throw InputError("nonpositive link weight");
      const double nd = c.dist[u] + w;
      if (c.dist[v] == kInf || (nd < c.dist[v] && !Tied(nd, c.dist[v]))) {
        c.dist[v] = nd;
        c.sigma[v] = c.sigma[u];
        c.pred_links[v].assign(1, e);
        heap.emplace(nd, v);
      } else if (Tied(nd, c.dist[v])) {
        c.sigma[v] += c.sigma[u];
        c.pred_links[v].push_back(e);
      }
    }
  }
  return c;
}

PathCensus ShortestPathCensus(const Network& network, NodeId source,
                              WeightMode mode) {
  return ShortestPathCensusAt(network, network.IndexOf(source), mode);
}

CentralityScores Betweenness(const Network& network, WeightMode mode,
                             const ODMatrix* od, int workers) {
  const int n = network.num_nodes();
  CentralityScores result;
  result.scores.assign(n, 0.0);
  result.mode = mode;
  result.od_weighted = od != nullptr;

  // Sources and their target weights.
  std::vector<int> sources;
  if (od != nullptr) {
    for (const ODMatrix::Row& row : od->rows()) sources.push_back(row.origin);
  } else {
    for (int v = 0; v < n; ++v) sources.push_back(v);
  }

  struct Partial {
    std::vector<double> scores;
    std::int64_t unreachable_pairs = 0;
    double unreachable_demand = 0.0;
  };
  const int num_sources = static_cast<int>(sources.size());
  for (int block = 0; block < num_sources; block += kSourceBlock) {
    const int block_size = std::min(kSourceBlock, num_sources - block);
    std::vector<Partial> partials(block_size);
    internal::ParallelFor(block_size, workers, [&](int i) {
      const int slot = block + i;
      const PathCensus census =
          ShortestPathCensusAt(network, sources[slot], mode);
      Partial& p = partials[i];
      p.scores.assign(n, 0.0);
      std::vector<double> weight(n, 0.0);
      if (od != nullptr) {
        for (const auto& [t, trips] : od->rows()[slot].targets) {
          if (census.dist[t] == kInf) {
            ++p.unreachable_pairs;
            p.unreachable_demand += trips;
          } else {
            weight[t] = trips;
          }
        }
      } else {
        for (int t : census.order) weight[t] = t == census.source ? 0.0 : 1.0;
      }
      std::vector<double> delta(n, 0.0);
      AccumulateSource(network, census, weight, delta, p.scores);
    });
    for (const Partial& p : partials) {
      for (int v = 0; v < n; ++v) result.scores[v] += p.scores[v];
      result.unreachable_pairs += p.unreachable_pairs;
      result.unreachable_demand += p.unreachable_demand;
    }
  }
  return result;
}

CentralityScores BlendedBetweenness(const Network& network, const ODMatrix* od,
                                    double alpha, int workers) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InputError("alpha must lie in [0, 1]");
  }
  const CentralityScores ft =
      Betweenness(network, WeightMode::kFreeFlowTime, od, workers);
  const CentralityScores ct =
      Betweenness(network, WeightMode::kCongestedTime, od, workers);
  CentralityScores out = ft;
  out.alpha = alpha;
  for (size_t v = 0; v < out.scores.size(); ++v) {
    out.scores[v] = alpha * ft.scores[v] + (1.0 - alpha) * ct.scores[v];
  }
  out.unreachable_pairs = ct.unreachable_pairs;
  out.unreachable_demand = ct.unreachable_demand;
  return out;
}

Grouping ParseGrouping(const std::string& text) {
  if (text == "none") return Grouping::kNone;
  if (text == "stub_vs_transit") return Grouping::kStubVsTransit;
  if (text == "road_type") return Grouping::kRoadType;
  throw InputError("unknown grouping '" + text +
                   "' (none|stub_vs_transit|road_type)");
}

std::optional<double> PearsonRSquared(const std::vector<double>& x,
                                      const std::vector<double>& y) {
  const size_t n = x.size();
  if (n < 3 || y.size() != n) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;
  return std::min(1.0, sxy * sxy / (sxx * syy));
}

std::vector<GroupCorrelation> CorrelationReport(const CentralityScores& scores,
                                                const Network& network,
                                                Grouping grouping,
                                                const ODMatrix* od) {
  const int n = network.num_nodes();
  if (static_cast<int>(scores.scores.size()) != n) {
    throw InputError("scores do not match the network");
  }
  const std::vector<double> flow = InboundFlow(network);

  std::vector<std::string> key(n, "all");
  if (grouping == Grouping::kStubVsTransit) {
    if (od == nullptr) throw InputError("stub/transit grouping needs an OD");
    const NodeClassification cls = ClassifyNodes(network, *od);
    for (int v = 0; v < n; ++v) {
      key[v] = cls.kinds[v] == NodeKind::kStub ? "stub" : "transit";
    }
  } else if (grouping == Grouping::kRoadType) {
    for (int v = 0; v < n; ++v) {
      std::optional<int> max_type;
      for (int e : network.in_links(v)) {
        const int t = network.link(e).road_type;
        if (!max_type || t > *max_type) max_type = t;
      }
      key[v] = max_type ? "type:" + std::to_string(*max_type) : "none";
    }
  }

  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>>
      groups;
  for (int v = 0; v < n; ++v) {
    auto& g = groups[key[v]];
    g.first.push_back(scores.scores[v]);
    g.second.push_back(flow[v]);
  }
  std::vector<GroupCorrelation> out;
  for (const auto& [name, xy] : groups) {
    out.push_back({name, static_cast<int>(xy.first.size()),
                   PearsonRSquared(xy.first, xy.second)});
  }
  return out;
}

}  // namespace fleetplan
