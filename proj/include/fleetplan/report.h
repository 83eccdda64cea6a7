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


// Serialization of results to JSON and CSV. Field order is fixed. JSON
// numbers use the shortest representation that parses back to the same
// double; CSV numbers use 17 significant digits.

#ifndef FLEETPLAN_REPORT_H_
#define FLEETPLAN_REPORT_H_

#include <string>
#include <vector>

#include "fleetplan/centrality.h"
#include "fleetplan/error.h"
#include "fleetplan/fleet.h"
#include "fleetplan/gompertz.h"
#include "fleetplan/network.h"
#include "fleetplan/placement.h"
#include "fleetplan/simulate.h"
#include "json.hpp"

namespace fleetplan {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv };

std::string ToString(Format format);
Format ParseFormat(const std::string& text);

// Thrown when a result kind has no representation in the requested format.
class UnsupportedFormat : public InputError {
 public:
  using InputError::InputError;
};

Json ToJson(const FleetPlan& plan);
Json ToJson(const UnitCountSolution& solution);
Json ToJson(const StationaryCost& point);
Json ToJson(const PrintedCaseStudy& study);
Json ToJson(const GompertzParams& params);
Json ToJson(const FitResult& fit);
Json ToJson(const CoverageEstimate& estimate);
Json ToJson(const MonitorGroup& group);
Json ToJson(const SearchResult& result);
Json ToJson(const std::vector<GreedyStep>& steps);
Json ToJson(const RandomBaselineResult& result);
Json ToJson(const CoverageCurve& curve);
Json ToJson(const StructuralSummary& summary);
Json ToJson(const std::vector<FlowBalance>& balances);
Json ToJson(const Histogram& histogram);
Json ToJson(const std::vector<GroupCorrelation>& groups);
Json ToJson(const CentralityScores& scores, const Network& network);

// Two-space indented, newline-terminated.
std::string DumpJson(const Json& json);

// Emit(result, format): JSON for every kind; CSV for tabular kinds only
// (curves, score lists, greedy steps, stationary points, flow balances,
// histograms, correlation reports, random baselines). Other pairings throw
// UnsupportedFormat.
std::string Emit(const FleetPlan& plan, Format format);
std::string Emit(const UnitCountSolution& solution, Format format);
std::string Emit(const std::vector<StationaryCost>& points, Format format);
std::string Emit(const FitResult& fit, Format format);
std::string Emit(const CoverageEstimate& estimate, Format format);
std::string Emit(const MonitorGroup& group, Format format);
std::string Emit(const SearchResult& result, Format format);
std::string Emit(const std::vector<GreedyStep>& steps, Format format);
std::string Emit(const RandomBaselineResult& result, Format format);
std::string Emit(const CoverageCurve& curve, Format format);
std::string Emit(const StructuralSummary& summary, Format format);
std::string Emit(const std::vector<FlowBalance>& balances, Format format);
std::string Emit(const Histogram& histogram, Format format);
std::string Emit(const std::vector<GroupCorrelation>& groups, Format format);
std::string Emit(const CentralityScores& scores, const Network& network,
                 Format format);

// Inverse of the CSV form of a coverage curve (header n,coverage,scheme).
CoverageCurve ParseCoverageCurveCsv(const std::string& text);

}  // namespace fleetplan

#endif  // FLEETPLAN_REPORT_H_
