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


// Brute-force oracles and random instance generators shared by the tests.
// Nothing here calls the library's path algorithms.

#ifndef FLEETPLAN_TESTS_ORACLES_H_
#define FLEETPLAN_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "fleetplan/centrality.h"
#include "fleetplan/network.h"

namespace fleetplan::testing {

inline std::string FixturePath(const std::string& name) {
  return std::string(FLEETPLAN_FIXTURE_DIR) + "/" + name;
}

inline Link MakeLink(NodeId from, NodeId to, double free_flow = 1.0,
                     double congested = 1.0, double flow = 0.0) {
  Link l;
  l.from = from;
  l.to = to;
  l.length_km = 1.0;
  l.road_type = 1;
  l.free_flow_min = free_flow;
  l.congested_min = congested;
  l.flow_vph = flow;
  return l;
}

// Random directed graph on n nodes with ids 10*i + 3. Times are small
// integers so that tied shortest paths are common.
inline Network RandomNetwork(std::mt19937_64& rng, int n, double density) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> time(1, 3);
  std::vector<NodeId> ids;
  for (int i = 0; i < n; ++i) ids.push_back(10 * i + 3);
  std::vector<Link> links;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || unit(rng) >= density) continue;
      Link l;
      l.from = ids[u];
      l.to = ids[v];
      l.length_km = 1.0;
      l.road_type = 1 + (u + v) % 3;
      l.free_flow_min = time(rng);
      l.congested_min = l.free_flow_min + time(rng) - 1;
      l.capacity_vph = 1000.0;
      l.flow_vph = std::floor(unit(rng) * 500.0);
      links.push_back(l);
    }
  }
  return Network::Build(ids, links);
}

inline ODMatrix RandomOD(std::mt19937_64& rng, const Network& net,
                         double density) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ODEntry> entries;
  for (int s = 0; s < net.num_nodes(); ++s) {
    for (int t = 0; t < net.num_nodes(); ++t) {
      if (s == t || unit(rng) >= density) continue;
      entries.push_back({net.id(s), net.id(t), 1.0 + std::floor(unit(rng) * 99.0)});
    }
  }
  if (entries.empty() && net.num_nodes() >= 2) {
    entries.push_back({net.id(0), net.id(1), 10.0});
  }
  return ODMatrix::Build(net, entries);
}

// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<double>> AllPairsDistances(const Network& net,
                                                          WeightMode mode) {
  const int n = net.num_nodes();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0.0;
  for (int l = 0; l < net.num_links(); ++l) {
    const Link& link = net.link(l);
    const double w = mode == WeightMode::kHops           ? 1.0
                     : mode == WeightMode::kFreeFlowTime ? link.free_flow_min
                                                         : link.congested_min;
    d[net.tail(l)][net.head(l)] = std::min(d[net.tail(l)][net.head(l)], w);
  }
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][m] + d[m][j] < d[i][j]) d[i][j] = d[i][m] + d[m][j];
  return d;
}

// Every shortest s-t path as a node-index sequence, by depth-first
// enumeration of simple paths pruned at the known distance.
inline std::vector<std::vector<int>> ShortestPaths(
    const Network& net, const std::vector<std::vector<double>>& dist,
    WeightMode mode, int s, int t) {
  std::vector<std::vector<int>> paths;
  if (!std::isfinite(dist[s][t])) return paths;
  const double target = dist[s][t];
  std::vector<int> path = {s};
  std::vector<char> on(net.num_nodes(), 0);
  on[s] = 1;
  std::function<void(int, double)> dfs = [&](int u, double len) {
    if (u == t) {
      if (std::abs(len - target) <= 1e-9 * std::max(1.0, target)) {
        paths.push_back(path);
      }
      return;
    }
    for (const int l : net.out_links(u)) {
      const int v = net.head(l);
      if (on[v]) continue;
      const Link& link = net.link(l);
      const double w = mode == WeightMode::kHops           ? 1.0
                       : mode == WeightMode::kFreeFlowTime ? link.free_flow_min
                                                           : link.congested_min;
      if (len + w > target + 1e-9 * std::max(1.0, target)) continue;
      on[v] = 1;
      path.push_back(v);
      dfs(v, len + w);
      path.pop_back();
      on[v] = 0;
    }
  };
  dfs(s, 0.0);
  return paths;
}

// Endpoint-inclusive betweenness by explicit path enumeration.
inline std::vector<double> OracleBetweenness(const Network& net,
                                             WeightMode mode,
                                             const ODMatrix* od) {
  const int n = net.num_nodes();
  const auto dist = AllPairsDistances(net, mode);
  std::vector<double> bc(n, 0.0);
  const auto credit = [&](int s, int t, double w) {
    const auto paths = ShortestPaths(net, dist, mode, s, t);
    for (const auto& p : paths) {
      for (const int v : p) bc[v] += w / static_cast<double>(paths.size());
    }
  };
  if (od) {
    for (const ODEntry& e : od->entries()) {
      credit(net.IndexOf(e.origin), net.IndexOf(e.destination), e.trips_per_hour);
    }
  } else {
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        if (s != t) credit(s, t, 1.0);
  }
  return bc;
}

// Demand on shortest paths that meet `group`, by explicit enumeration.
inline double OracleGroupValue(const Network& net, const ODMatrix& od,
                               WeightMode mode, const std::vector<int>& group) {
  const auto dist = AllPairsDistances(net, mode);
  double value = 0.0;
  for (const ODEntry& e : od.entries()) {
    const auto paths = ShortestPaths(net, dist, mode, net.IndexOf(e.origin),
                                     net.IndexOf(e.destination));
    if (paths.empty()) continue;
    int hit = 0;
    for (const auto& p : paths) {
      const bool meets = std::any_of(p.begin(), p.end(), [&](int v) {
        return std::find(group.begin(), group.end(), v) != group.end();
      });
      hit += meets;
    }
    value += e.trips_per_hour * hit / static_cast<double>(paths.size());
  }
  return value;
}

// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
inline void ForEachSubset(int n, int k,
                          const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Root of a continuous function on [lo, hi] with a sign change.
inline double Bisect(const std::function<double(double)>& f, double lo,
                     double hi) {
  double flo = f(lo);
  for (int i = 0; i < 2000 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace fleetplan::testing

#endif  // FLEETPLAN_TESTS_ORACLES_H_
