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


#include "fleetplan/report.h"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "oracles.h"

namespace fleetplan {
namespace {

std::set<std::string> Keys(const Json& json) {
  std::set<std::string> keys;
  for (const auto& item : json.items()) keys.insert(item.key());
  return keys;
}

std::string FirstLine(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

struct Fixture {
  Network net = LoadNetworkFile(testing::FixturePath("grid10_links.csv"));
  ODMatrix od = LoadODMatrixFile(testing::FixturePath("grid10_od.csv"), net);
  GroupCoverageEvaluator eval{net, od, WeightMode::kCongestedTime};
};

TEST(Report, FleetPlanHasExactlyFiveKeysInOrder) {
  const FleetPlan plan{60, 5000.0, 1.0, 123.5, PlanMethod::kBoundary};
  const Json json = ToJson(plan);
  std::vector<std::string> keys;
  for (const auto& item : json.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"n_units", "unit_cost", "sampling",
                                            "omega", "method"}));
  EXPECT_EQ(json["method"], "boundary");
  EXPECT_THROW(Emit(plan, Format::kCsv), UnsupportedFormat);
}

TEST(Report, CoverageEstimateKeys) {
  const CoverageEstimate est{0.25, 0.01, 1000, 7};
  EXPECT_EQ(Keys(ToJson(est)),
            (std::set<std::string>{"mean", "std_error", "samples", "seed"}));
  EXPECT_THROW(Emit(est, Format::kCsv), UnsupportedFormat);
}

TEST(Report, CsvHeaders) {
  Fixture f;
  const CoverageCurve curve =
      BuildCoverageCurve(f.eval, f.od, CurveScheme::kGbcGreedy, 4);
  EXPECT_EQ(FirstLine(Emit(curve, Format::kCsv)), "n,coverage,scheme");
  const CentralityScores scores = Betweenness(f.net, WeightMode::kHops, nullptr);
  EXPECT_EQ(FirstLine(Emit(scores, f.net, Format::kCsv)), "node,score");
  EXPECT_EQ(FirstLine(Emit(GreedyPlacement(f.eval, 2), Format::kCsv)),
            "step,node,marginal_gain,cumulative");
  EXPECT_EQ(FirstLine(Emit(FlowConsistency(f.net), Format::kCsv)),
            "node,inbound_flow,outbound_flow,imbalance");
  EXPECT_EQ(FirstLine(Emit(RandomPlacement(f.eval, 2, 1, 3), Format::kCsv)),
            "repetition,value");
}

TEST(Report, CsvUsesSeventeenSignificantDigits) {
  CoverageCurve curve;
  curve.points = {{1, 0.1}, {2, 1.0 / 3.0}};
  const std::string csv = Emit(curve, Format::kCsv);
  EXPECT_NE(csv.find("1,0.10000000000000001,gbc_greedy"), std::string::npos);
  EXPECT_NE(csv.find("2,0.33333333333333331,gbc_greedy"), std::string::npos);
}

TEST(Report, CurveCsvRoundTripIsBytewiseIdempotent) {
  Fixture f;
  for (const CurveScheme s :
       {CurveScheme::kGbcGreedy, CurveScheme::kBcTopK, CurveScheme::kRandom}) {
    const CoverageCurve curve = BuildCoverageCurve(f.eval, f.od, s, 6);
    const std::string once = Emit(curve, Format::kCsv);
    const CoverageCurve parsed = ParseCoverageCurveCsv(once);
    EXPECT_EQ(parsed.scheme, s);
    ASSERT_EQ(parsed.points.size(), curve.points.size());
    for (size_t i = 0; i < curve.points.size(); ++i) {
      EXPECT_EQ(parsed.points[i].coverage, curve.points[i].coverage);
    }
    EXPECT_EQ(Emit(parsed, Format::kCsv), once);
  }
}

TEST(Report, JsonRoundTripIsBytewiseIdempotent) {
  Fixture f;
  const std::vector<Json> docs = {
      ToJson(ExactPlacement(f.eval, 2, SearchAlgorithm::kDfbnb, 10.0)),
      ToJson(GreedyPlacement(f.eval, 3)),
      ToJson(BlendedBetweenness(f.net, &f.od, 0.25), f.net),
      ToJson(ComputeStructuralSummary(f.net)),
      ToJson(DistributionHistogram(InboundCongestion(f.net), 5)),
      ToJson(OptimalUnitCount({1.0, -0.2, -0.05}, 5000.0, 1e7, 1.0)),
      ToJson(PlanFleet({1.0, -0.2, -0.05}, {1e7, 5000.0, std::nullopt},
                       SamplingModel::Power(2.0))),
  };
  for (const Json& doc : docs) {
    const std::string once = DumpJson(doc);
    EXPECT_EQ(once.back(), '\n');
    EXPECT_EQ(DumpJson(Json::parse(once)), once);
  }
}

TEST(Report, NetworkCsvRoundTripIsBytewiseIdempotent) {
  Fixture f;
  std::stringstream a;
  WriteNetwork(f.net, a);
  std::stringstream copy(a.str());
  std::stringstream b;
  WriteNetwork(LoadNetwork(copy), b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Report, FormatParsing) {
  EXPECT_EQ(ParseFormat("json"), Format::kJson);
  EXPECT_EQ(ParseFormat("csv"), Format::kCsv);
  EXPECT_THROW(ParseFormat("xml"), InputError);
  EXPECT_THROW(ParseCoverageCurveCsv("n,value\n1,0.5\n"), InputError);
}

}  // namespace
}  // namespace fleetplan
