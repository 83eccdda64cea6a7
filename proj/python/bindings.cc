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


// Python bindings. Results come back as plain dicts and lists with the
// same keys as the JSON reports.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fleetplan/centrality.h"
#include "fleetplan/error.h"
#include "fleetplan/fleet.h"
#include "fleetplan/gompertz.h"
#include "fleetplan/lambert_w.h"
#include "fleetplan/network.h"
#include "fleetplan/placement.h"
#include "fleetplan/report.h"
#include "fleetplan/simulate.h"

namespace py = pybind11;

namespace fleetplan {
namespace {

py::object ToPython(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const Json& item : j) out.append(ToPython(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& item : j.items()) out[py::str(item.key())] = ToPython(item.value());
      return out;
    }
    default: throw InputError("unsupported JSON value");
  }
}

LambertBranch ParseBranch(const std::string& text) {
  if (text == "principal" || text == "0") return LambertBranch::kPrincipal;
  if (text == "minus_one" || text == "-1") return LambertBranch::kMinusOne;
  throw InputError("unknown branch '" + text + "' (principal|minus_one)");
}

SearchAlgorithm ParseAlgorithm(const std::string& text) {
  if (text == "dfbnb") return SearchAlgorithm::kDfbnb;
  if (text == "potential") return SearchAlgorithm::kPotential;
  throw InputError("unknown algorithm '" + text + "' (dfbnb|potential)");
}

ThreatScenario Scenario(double c_attack, double cost_base,
                        std::optional<std::vector<double>> catalog) {
  return {c_attack, cost_base, std::move(catalog)};
}

py::dict Scores(const Network& net, const CentralityScores& s) {
  py::dict out;
  for (int v = 0; v < net.num_nodes(); ++v) out[py::int_(net.id(v))] = s.scores[v];
  return out;
}

std::vector<int> Indices(const Network& net, const std::vector<NodeId>& ids) {
  std::vector<int> out;
  for (const NodeId id : ids) out.push_back(net.IndexOf(id));
  return out;
}

}  // namespace
}  // namespace fleetplan

PYBIND11_MODULE(_fleetplan, m) {
  using namespace fleetplan;
  using namespace pybind11::literals;

  m.doc() = "Monitor placement and fleet economics on road networks";
  m.attr("__version__") = FLEETPLAN_VERSION;

  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

  py::class_<Network>(m, "Network")
      .def_property_readonly("num_nodes", &Network::num_nodes)
      .def_property_readonly("num_links", &Network::num_links)
      .def_property_readonly("ids", [](const Network& n) {
        return std::vector<NodeId>(n.ids().begin(), n.ids().end());
      })
      .def_property_readonly("warnings", &Network::warnings)
      .def("__repr__", [](const Network& n) {
        return "<Network nodes=" + std::to_string(n.num_nodes()) +
               " links=" + std::to_string(n.num_links()) + ">";
      });

  py::class_<ODMatrix>(m, "ODMatrix")
      .def_property_readonly("total_demand", &ODMatrix::total_demand)
      .def_property_readonly("num_entries",
                             [](const ODMatrix& od) { return od.entries().size(); })
      .def("entries", [](const ODMatrix& od) {
        std::vector<std::tuple<NodeId, NodeId, double>> out;
        for (const ODEntry& e : od.entries()) {
          out.emplace_back(e.origin, e.destination, e.trips_per_hour);
        }
        return out;
      });

  m.def("load_network", &LoadNetworkFile, "path"_a);
  m.def("load_od", &LoadODMatrixFile, "path"_a, "network"_a);
  m.def("structural_summary", [](const Network& net) {
    return ToPython(ToJson(ComputeStructuralSummary(net)));
  }, "network"_a);

  m.def("lambert_w", [](double x, const std::string& branch) {
    return LambertW(ParseBranch(branch), x);
  }, "x"_a, "branch"_a = "principal");

  m.def("gompertz_value", [](double a_, double b, double c, double n) {
    const GompertzParams p{a_, b, c};
    ValidateGompertz(p);
    return GompertzValue(p, n);
  }, "a"_a, "b"_a, "c"_a, "n"_a);
  m.def("fit_gompertz", [](const std::vector<std::pair<double, double>>& points) {
    return ToPython(ToJson(FitGompertz(points)));
  }, "points"_a);

  m.def("optimal_unit_count",
        [](double a_, double b, double c, double cost_per_unit, double c_attack,
           double sampling) {
          return ToPython(ToJson(OptimalUnitCount({a_, b, c}, cost_per_unit,
                                                  c_attack, sampling)));
        },
        "a"_a, "b"_a, "c"_a, "cost_per_unit"_a, "c_attack"_a, "sampling"_a = 1.0);
  m.def("optimal_unit_cost",
        [](double a_, double b, double c, double c_attack, double cost_base,
           const std::string& sampling) {
          py::list out;
          for (const StationaryCost& s :
               OptimalUnitCost({a_, b, c}, Scenario(c_attack, cost_base, std::nullopt),
                               ParseSamplingModel(sampling))) {
            out.append(ToPython(ToJson(s)));
          }
          return out;
        },
        "a"_a, "b"_a, "c"_a, "c_attack"_a, "cost_base"_a, "sampling"_a = "power:2");
  m.def("plan_fleet",
        [](double a_, double b, double c, double c_attack, double cost_base,
           const std::string& sampling, std::optional<std::vector<double>> catalog) {
          return ToPython(ToJson(PlanFleet({a_, b, c},
                                           Scenario(c_attack, cost_base, std::move(catalog)),
                                           ParseSamplingModel(sampling))));
        },
        "a"_a, "b"_a, "c"_a, "c_attack"_a, "cost_base"_a, "sampling"_a = "power:2",
        "catalog"_a = py::none());

  m.def("betweenness",
        [](const Network& net, const std::string& mode, const ODMatrix* od, int workers) {
          return Scores(net, Betweenness(net, ParseWeightMode(mode), od, workers));
        },
        "network"_a, "mode"_a = "ct", "od"_a = py::none(), "workers"_a = 1);
  m.def("blended_betweenness",
        [](const Network& net, const ODMatrix& od, double alpha, int workers) {
          return Scores(net, BlendedBetweenness(net, &od, alpha, workers));
        },
        "network"_a, "od"_a, "alpha"_a = 0.25, "workers"_a = 1);

  m.def("group_betweenness",
        [](const Network& net, const ODMatrix& od, const std::vector<NodeId>& group,
           const std::string& mode) {
          return GroupBetweenness(net, od, group, ParseWeightMode(mode));
        },
        "network"_a, "od"_a, "group"_a, "mode"_a = "ct");
  m.def("greedy_placement",
        [](const Network& net, const ODMatrix& od, int k, const std::string& mode) {
          return ToPython(ToJson(GreedyPlacement(net, od, k, ParseWeightMode(mode))));
        },
        "network"_a, "od"_a, "k"_a, "mode"_a = "ct");
  m.def("exact_placement",
        [](const Network& net, const ODMatrix& od, int k, const std::string& algorithm,
           double time_budget_s, const std::string& mode) {
          const GroupCoverageEvaluator eval(net, od, ParseWeightMode(mode));
          return ToPython(
              ToJson(ExactPlacement(eval, k, ParseAlgorithm(algorithm), time_budget_s)));
        },
        "network"_a, "od"_a, "k"_a, "algorithm"_a = "dfbnb", "time_budget_s"_a = 3600.0,
        "mode"_a = "ct");
  m.def("random_placement",
        [](const Network& net, const ODMatrix& od, int k, std::uint64_t seed,
           int repetitions, const std::string& mode) {
          const GroupCoverageEvaluator eval(net, od, ParseWeightMode(mode));
          return ToPython(ToJson(RandomPlacement(eval, k, seed, repetitions)));
        },
        "network"_a, "od"_a, "k"_a, "seed"_a = 1, "repetitions"_a = 30, "mode"_a = "ct");
  m.def("coverage_curve",
        [](const Network& net, const ODMatrix& od, const std::string& scheme, int k_max,
           const std::string& mode, std::optional<double> alpha, std::uint64_t seed,
           int repetitions) {
          const GroupCoverageEvaluator eval(net, od, ParseWeightMode(mode));
          CurveConfig config;
          config.alpha = alpha;
          config.seed = seed;
          config.repetitions = repetitions;
          const CoverageCurve curve =
              BuildCoverageCurve(eval, od, ParseCurveScheme(scheme), k_max, config);
          std::vector<std::pair<int, double>> out;
          for (const CoveragePoint& p : curve.points) out.emplace_back(p.n, p.coverage);
          return out;
        },
        "network"_a, "od"_a, "scheme"_a = "gbc_greedy", "k_max"_a = 10, "mode"_a = "ct",
        "alpha"_a = 0.25, "seed"_a = 1, "repetitions"_a = 30);

  m.def("detection_probability",
        [](const std::vector<NodeId>& path, const std::vector<NodeId>& monitors, double q) {
          return DetectionProbability(path, monitors, q);
        },
        "path"_a, "monitors"_a, "q"_a);
  m.def("exact_coverage",
        [](const Network& net, const ODMatrix& od, const std::vector<NodeId>& monitors,
           double q, const std::string& mode) {
          return ExactCoverage(net, od, monitors, q, ParseWeightMode(mode));
        },
        "network"_a, "od"_a, "monitors"_a, "q"_a, "mode"_a = "ct");
  m.def("estimate_coverage",
        [](const Network& net, const ODMatrix& od, const std::vector<NodeId>& monitors,
           double q, std::int64_t samples, std::uint64_t seed, const std::string& mode,
           int workers) {
          return ToPython(ToJson(EstimateCoverage(net, od, monitors, {q, samples, seed},
                                                  ParseWeightMode(mode), workers)));
        },
        "network"_a, "od"_a, "monitors"_a, "q"_a, "samples"_a = 100000, "seed"_a = 1,
        "mode"_a = "ct", "workers"_a = 1);

  // Group value of node ids through the cached evaluator.
  m.def("group_coverage_fraction",
        [](const Network& net, const ODMatrix& od, const std::vector<NodeId>& group,
           const std::string& mode) {
          const GroupCoverageEvaluator eval(net, od, ParseWeightMode(mode));
          return ToPython(ToJson(MakeMonitorGroup(eval, Indices(net, group))));
        },
        "network"_a, "od"_a, "group"_a, "mode"_a = "ct");
}
