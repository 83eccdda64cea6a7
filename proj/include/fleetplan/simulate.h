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


// Detection of OD traffic by monitors that each inspect a passing vehicle
// with probability q, independently. Vehicles follow a shortest path chosen
// uniformly among all tied shortest paths.

#ifndef FLEETPLAN_SIMULATE_H_
#define FLEETPLAN_SIMULATE_H_

#include <cstdint>
#include <span>

#include "fleetplan/centrality.h"
#include "fleetplan/network.h"

namespace fleetplan {

struct DetectionConfig {
  double q = 1.0;             // per-monitor sampling rate in [0, 1]
  std::int64_t samples = 1;   // simulated trips
  std::uint64_t seed = 1;
};

struct CoverageEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

// 1 - (1 - q)^k with k the number of distinct path nodes that are monitors.
// Throws InputError for an empty path or q outside [0, 1].
double DetectionProbability(std::span<const NodeId> path,
                            std::span<const NodeId> monitors, double q);

inline constexpr std::int64_t kDefaultPathGuard = 10'000;

// Demand-weighted mean detection probability over every shortest path of
// every OD pair, divided by total demand. Unreachable pairs count as
// undetected. Throws GuardExceeded when more than `path_guard` paths would
// be enumerated, InputError for an empty OD or unknown monitor ids.
double ExactCoverage(const Network& network, const ODMatrix& od,
                     std::span<const NodeId> monitors, double q,
                     WeightMode mode,
                     std::int64_t path_guard = kDefaultPathGuard);

// Monte Carlo estimate of ExactCoverage. Trip i draws from its own stream
// (seed, i): first the OD pair in proportion to demand, then the path, then
// one Bernoulli(q) trial per on-path monitor. The result depends only on
// (inputs, config), never on `workers`.
CoverageEstimate EstimateCoverage(const Network& network, const ODMatrix& od,
                                  std::span<const NodeId> monitors,
                                  const DetectionConfig& config,
                                  WeightMode mode, int workers = 1);

}  // namespace fleetplan

#endif  // FLEETPLAN_SIMULATE_H_
