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


#include "fleetplan/simulate.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "fleetplan/error.h"
#include "fleetplan/random.h"
#include "parallel.h"

namespace fleetplan {
namespace {

void CheckRate(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw InputError("q must be in [0, 1]");
}

std::vector<char> MonitorFlags(const Network& network,
                               std::span<const NodeId> monitors) {
  std::vector<char> flags(network.num_nodes(), 0);
  for (const NodeId id : monitors) flags[network.IndexOf(id)] = 1;
  return flags;
}

double MissProbability(double q, int k) {
  return std::pow(1.0 - q, static_cast<double>(k));
}

}  // namespace

double DetectionProbability(std::span<const NodeId> path,
                            std::span<const NodeId> monitors, double q) {
  if (path.empty()) throw InputError("path is empty");
  CheckRate(q);
  std::vector<NodeId> distinct(path.begin(), path.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  int k = 0;
  for (const NodeId v : distinct) {
    if (std::find(monitors.begin(), monitors.end(), v) != monitors.end()) ++k;
  }
  return 1.0 - MissProbability(q, k);
}

double ExactCoverage(const Network& network, const ODMatrix& od,
                     std::span<const NodeId> monitors, double q,
                     WeightMode mode, std::int64_t path_guard) {
  CheckRate(q);
  if (od.empty()) throw InputError("OD matrix is empty");
  const std::vector<char> flags = MonitorFlags(network, monitors);

  std::int64_t paths_seen = 0;
  double covered = 0.0;
  double total = 0.0;
  for (const ODMatrix::Row& row : od.rows()) {
    const PathCensus census = ShortestPathCensusAt(network, row.origin, mode);
    for (const auto& [target, trips] : row.targets) {
      total += trips;
      if (!std::isfinite(census.dist[target])) continue;
      double detected = 0.0;
      std::int64_t count = 0;
      // Walks every shortest path backwards from the target; `k` counts
      // monitors on the suffix already visited.
      std::function<void(int, int)> walk = [&](int v, int k) {
        k += flags[v];
        if (v == row.origin) {
          if (++paths_seen > path_guard) {
            throw GuardExceeded("exact coverage needs more than " +
                                std::to_string(path_guard) +
                                " path evaluations");
          }
          ++count;
          detected += 1.0 - MissProbability(q, k);
          return;
        }
        for (const int link : census.pred_links[v]) walk(network.tail(link), k);
      };
      walk(target, 0);
      covered += trips * (detected / static_cast<double>(count));
    }
  }
  return covered / total;
}

CoverageEstimate EstimateCoverage(const Network& network, const ODMatrix& od,
                                  std::span<const NodeId> monitors,
                                  const DetectionConfig& config,
                                  WeightMode mode, int workers) {
  CheckRate(config.q);
  if (config.samples < 1) throw InputError("samples must be >= 1");
  if (od.empty()) throw InputError("OD matrix is empty");
  const std::vector<char> flags = MonitorFlags(network, monitors);

  const auto rows = od.rows();
  std::vector<PathCensus> censuses(rows.size());
  internal::ParallelFor(static_cast<int>(rows.size()), workers, [&](int r) {
    censuses[r] = ShortestPathCensusAt(network, rows[r].origin, mode);
  });

  struct Pair {
    int row;
    int target;
  };
  std::vector<Pair> pairs;
  std::vector<double> cumulative;
  double running = 0.0;
  for (size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [target, trips] : rows[r].targets) {
      running += trips;
      pairs.push_back({static_cast<int>(r), target});
      cumulative.push_back(running);
    }
  }

  const auto simulate_trip = [&](std::int64_t trip) -> bool {
    SplitMix64 rng =
        SplitMix64::Stream(config.seed, static_cast<std::uint64_t>(trip));
    const double u = rng.Uniform() * running;
    const size_t p = std::min<size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), u) -
            cumulative.begin(),
        pairs.size() - 1);
    const PathCensus& census = censuses[pairs[p].row];
    int v = pairs[p].target;
    if (!std::isfinite(census.dist[v])) return false;
    bool detected = false;
    while (true) {
      if (flags[v] && !detected && rng.Bernoulli(config.q)) detected = true;
      if (v == census.source) break;
      const auto& preds = census.pred_links[v];
      double pick = rng.Uniform() * census.sigma[v];
      int next = network.tail(preds.back());
      for (const int link : preds) {
        const int t = network.tail(link);
        pick -= census.sigma[t];
        if (pick < 0.0) {
          next = t;
          break;
        }
      }
      v = next;
    }
    return detected;
  };

  constexpr std::int64_t kBlock = 4096;
  const std::int64_t blocks = (config.samples + kBlock - 1) / kBlock;
  std::vector<std::int64_t> hits(blocks, 0);
  internal::ParallelFor(static_cast<int>(blocks), workers, [&](int b) {
    const std::int64_t begin = b * kBlock;
    const std::int64_t end = std::min(config.samples, begin + kBlock);
    std::int64_t h = 0;
    for (std::int64_t t = begin; t < end; ++t) h += simulate_trip(t);
    hits[b] = h;
  });
  std::int64_t total_hits = 0;
  for (const std::int64_t h : hits) total_hits += h;

  CoverageEstimate est;
  est.samples = config.samples;
  est.seed = config.seed;
  const double n = static_cast<double>(config.samples);
  est.mean = static_cast<double>(total_hits) / n;
  est.std_error = std::sqrt(est.mean * (1.0 - est.mean) / n);
  return est;
}

}  // namespace fleetplan
