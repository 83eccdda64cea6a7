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


// fleetplan: command-line front end. Every subcommand reads files and flags,
// writes one result (stdout or --out) and a run manifest (<out>.manifest.json,
// or stderr when writing to stdout).

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fleetplan/centrality.h"
#include "fleetplan/error.h"
#include "fleetplan/fleet.h"
#include "fleetplan/gompertz.h"
#include "fleetplan/network.h"
#include "fleetplan/placement.h"
#include "fleetplan/report.h"
#include "fleetplan/simulate.h"

namespace fleetplan {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDegenerate = 2;

std::string Sha256File(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
      EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::vector<char> buffer(1 << 16);
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &length);
  std::string hex;
  char byte[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(byte, sizeof(byte), "%02x", digest[i]);
    hex += byte;
  }
  return hex;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<NodeId> ParseIdList(const std::string& text) {
  std::vector<NodeId> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    size_t used = 0;
    NodeId id = 0;
    try {
      id = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw InputError("bad node id in list: " + item);
    }
    ids.push_back(id);
  }
  return ids;
}

// Options shared by the subcommands, bound into each one that uses them.
struct Common {
  std::string links;
  std::string od;
  std::string mode = "ct";
  std::string out;
  std::string format;
  int workers = 1;
  std::uint64_t seed = 1;
};

struct Run {
  std::string output;
  std::string format;
  std::vector<std::string> inputs;
  int exit_code = kExitOk;
};

void AddNetworkOptions(CLI::App* sub, Common& common, bool od_required) {
  sub->add_option("--links", common.links,
                  "Link CSV (from,to,length_km,road_type,free_flow_min,"
                  "congested_min,capacity_vph,toll_min,flow_vph)")
      ->required()
      ->check(CLI::ExistingFile);
  auto* od = sub->add_option("--od", common.od,
                             "OD CSV (origin,destination,trips_per_hour)")
                 ->check(CLI::ExistingFile);
  if (od_required) od->required();
}

void AddOutputOptions(CLI::App* sub, Common& common) {
  sub->add_option("--out", common.out,
                  "Output file; stdout when omitted. The manifest goes to "
                  "<out>.manifest.json, or stderr for stdout");
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void AddModeOption(CLI::App* sub, Common& common, const std::string& what) {
  sub->add_option("--mode", common.mode,
                  what + ": hops, ft (free-flow minutes) or ct (congested "
                         "minutes)")
      ->capture_default_str()
      ->check(CLI::IsMember({"hops", "ft", "ct"}));
}

void AddWorkersOption(CLI::App* sub, Common& common) {
  sub->add_option("--workers", common.workers,
                  "Worker threads (results do not depend on it)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

Json ManifestParameters(const CLI::App* sub) {
  Json params = Json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_single_name() == "help") continue;
    const std::string name = opt->get_single_name();
    if (opt->count() > 0) {
      const auto& results = opt->results();
      params[name] = results.size() == 1 ? Json(results[0]) : Json(results);
    } else if (!opt->get_default_str().empty()) {
      params[name] = opt->get_default_str();
    }
  }
  return params;
}

void WriteOutputs(const CLI::App* sub, const Common& common, const Run& run,
                  double elapsed_s) {
  Json manifest;
  manifest["tool"] = "fleetplan";
  manifest["version"] = FLEETPLAN_VERSION;
  manifest["command"] = sub->get_name();
  manifest["parameters"] = ManifestParameters(sub);
  manifest["inputs"] = Json::array();
  for (const std::string& path : run.inputs) {
    manifest["inputs"].push_back({{"path", path}, {"sha256", Sha256File(path)}});
  }
  manifest["format"] = run.format;
  manifest["exit_code"] = run.exit_code;
  manifest["elapsed_s"] = elapsed_s;

  if (common.out.empty()) {
    std::cout << run.output << std::flush;
    std::cerr << DumpJson(manifest);
    return;
  }
  std::ofstream out(common.out, std::ios::binary);
  if (!out) throw InputError("cannot write " + common.out);
  out << run.output;
  std::ofstream side(common.out + ".manifest.json", std::ios::binary);
  if (!side) throw InputError("cannot write " + common.out + ".manifest.json");
  side << DumpJson(manifest);
}

Format ChosenFormat(const Common& common, Format fallback) {
  return common.format.empty() ? fallback : ParseFormat(common.format);
}

struct Loaded {
  Network network;
  std::optional<ODMatrix> od;
};

Loaded LoadInputs(const Common& common, Run& run) {
  Loaded loaded;
  loaded.network = LoadNetworkFile(common.links);
  run.inputs.push_back(common.links);
  if (!common.od.empty()) {
    loaded.od = LoadODMatrixFile(common.od, loaded.network);
    run.inputs.push_back(common.od);
  }
  return loaded;
}

}  // namespace

int Main(int argc, char** argv) {
  CLI::App app{"fleetplan: monitoring-unit placement and fleet economics on "
               "road networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FLEETPLAN_VERSION);
  Common common;
  std::function<Run()> action;

  // validate ---------------------------------------------------------------
  auto* validate = app.add_subcommand(
      "validate", "Load and check a network (and OD matrix); report counts");
  AddNetworkOptions(validate, common, false);
  AddOutputOptions(validate, common);
  validate->callback([&] {
    action = [&] {
      Run run;
      Loaded in = LoadInputs(common, run);
      Json j;
      j["nodes"] = in.network.num_nodes();
      j["links"] = in.network.num_links();
      j["warnings"] = in.network.warnings();
      if (in.od) {
        const NodeClassification kinds = ClassifyNodes(in.network, *in.od);
        j["od_entries"] = in.od->entries().size();
        j["total_demand"] = in.od->total_demand();
        j["stub_nodes"] = kinds.stub_count;
        j["transit_nodes"] = kinds.transit_count;
      }
      if (ChosenFormat(common, Format::kJson) != Format::kJson) {
        throw UnsupportedFormat("validation report has no csv form");
      }
      run.format = "json";
      run.output = DumpJson(j);
      return run;
    };
  });

  // stats ------------------------------------------------------------------
  std::string stats_report = "all";
  int bins = 10;
  auto* stats = app.add_subcommand(
      "stats", "Structural summary, flow consistency and inbound histograms");
  AddNetworkOptions(stats, common, false);
  AddOutputOptions(stats, common);
  stats->add_option("--report", stats_report,
                    "all | summary | flow (vehicles/hour balance per node) | "
                    "congestion (histogram of inbound congested minus "
                    "free-flow minutes) | inbound-flow (histogram of inbound "
                    "vehicles/hour)")
      ->capture_default_str()
      ->check(CLI::IsMember(
          {"all", "summary", "flow", "congestion", "inbound-flow"}));
  stats->add_option("--bins", bins, "Histogram bins (count)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  stats->callback([&] {
    action = [&] {
      Run run;
      Loaded in = LoadInputs(common, run);
      const Format format = ChosenFormat(common, Format::kJson);
      run.format = ToString(format);
      const auto congestion = [&] {
        const auto v = InboundCongestion(in.network);
        return DistributionHistogram(v, bins);
      };
      const auto inflow = [&] {
        const auto v = InboundFlow(in.network);
        return DistributionHistogram(v, bins);
      };
      if (stats_report == "summary") {
        run.output = Emit(ComputeStructuralSummary(in.network), format);
      } else if (stats_report == "flow") {
        run.output = Emit(FlowConsistency(in.network), format);
      } else if (stats_report == "congestion") {
        run.output = Emit(congestion(), format);
      } else if (stats_report == "inbound-flow") {
        run.output = Emit(inflow(), format);
      } else {
        if (format != Format::kJson) {
          throw UnsupportedFormat("--report all has no csv form");
        }
        Json j;
        j["summary"] = ToJson(ComputeStructuralSummary(in.network));
        j["flow_consistency"] = ToJson(FlowConsistency(in.network));
        j["inbound_congestion_histogram"] = ToJson(congestion());
        j["inbound_flow_histogram"] = ToJson(inflow());
        run.output = DumpJson(j);
      }
      return run;
    };
  });

  // centrality -------------------------------------------------------------
  std::optional<double> alpha;
  std::string group_by;
  auto* centrality = app.add_subcommand(
      "centrality",
      "Endpoint-inclusive betweenness per node (vehicles/hour with --od, "
      "path counts without)");
  AddNetworkOptions(centrality, common, false);
  AddOutputOptions(centrality, common);
  AddModeOption(centrality, common, "Path length");
  AddWorkersOption(centrality, common);
  centrality
      ->add_option("--alpha", alpha,
                   "Blend alpha*BC(ft) + (1-alpha)*BC(ct), alpha in [0,1]; "
                   "overrides --mode")
      ->check(CLI::Range(0.0, 1.0));
  centrality
      ->add_option("--group-by", group_by,
                   "Report R^2 of score against inbound flow per group "
                   "instead of scores: none | stub_vs_transit | road_type")
      ->check(CLI::IsMember({"none", "stub_vs_transit", "road_type"}));
  centrality->callback([&] {
    action = [&] {
      Run run;
      Loaded in = LoadInputs(common, run);
      const ODMatrix* od = in.od ? &*in.od : nullptr;
      const CentralityScores scores =
          alpha ? BlendedBetweenness(in.network, od, *alpha, common.workers)
                : Betweenness(in.network, ParseWeightMode(common.mode), od,
                              common.workers);
      const Format format = ChosenFormat(common, Format::kCsv);
      run.format = ToString(format);
      if (!group_by.empty()) {
        run.output = Emit(CorrelationReport(scores, in.network,
                                            ParseGrouping(group_by), od),
                          format);
      } else {
        run.output = Emit(scores, in.network, format);
      }
      return run;
    };
  });

  // place ------------------------------------------------------------------
  int k = 1;
  std::string algo = "greedy";
  double time_budget_s = 3600.0;
  int reps = 30;
  std::string bc_mode = "ct";
  auto* place = app.add_subcommand(
      "place", "Choose k monitor locations maximizing covered OD demand");
  AddNetworkOptions(place, common, true);
  AddOutputOptions(place, common);
  AddModeOption(place, common, "Route length for coverage");
  AddWorkersOption(place, common);
  place->add_option("--k", k, "Number of monitors (count)")
      ->required()
      ->check(CLI::PositiveNumber);
  place->add_option("--algo", algo, "greedy | dfbnb | potential | random | bctopk")
      ->capture_default_str()
      ->check(CLI::IsMember({"greedy", "dfbnb", "potential", "random", "bctopk"}));
  place->add_option("--time-budget-s", time_budget_s,
                    "Wall-clock budget for dfbnb/potential (seconds)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  place->add_option("--seed", common.seed, "Seed for --algo random")
      ->capture_default_str();
  place->add_option("--reps", reps, "Repetitions for --algo random (count)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  place->add_option("--alpha", alpha,
                    "bctopk: rank by blended betweenness with this alpha")
      ->check(CLI::Range(0.0, 1.0));
  place->add_option("--bc-mode", bc_mode,
                    "bctopk: path length used for ranking (hops|ft|ct)")
      ->capture_default_str()
      ->check(CLI::IsMember({"hops", "ft", "ct"}));
  place->callback([&] {
    action = [&] {
      Run run;
      Loaded in = LoadInputs(common, run);
      const GroupCoverageEvaluator evaluator(
          in.network, *in.od, ParseWeightMode(common.mode), common.workers);
      const Format format = ChosenFormat(common, Format::kJson);
      run.format = ToString(format);
      if (algo == "greedy") {
        const auto steps = GreedyPlacement(evaluator, k);
        if (format == Format::kCsv) {
          run.output = Emit(steps, format);
        } else {
          std::vector<int> idx;
          for (const GreedyStep& s : steps) {
            idx.push_back(in.network.IndexOf(s.node));
          }
          Json j;
          j["algorithm"] = "greedy";
          const Json group = ToJson(MakeMonitorGroup(evaluator, idx));
          for (const auto& [key, value] : group.items()) j[key] = value;
          j["steps"] = ToJson(steps);
          run.output = DumpJson(j);
        }
      } else if (algo == "dfbnb" || algo == "potential") {
        const SearchResult result = ExactPlacement(
            evaluator, k,
            algo == "dfbnb" ? SearchAlgorithm::kDfbnb
                            : SearchAlgorithm::kPotential,
            time_budget_s);
        run.output = Emit(result, format);
      } else if (algo == "random") {
        run.output =
            Emit(RandomPlacement(evaluator, k, common.seed, reps), format);
      } else {
        const MonitorGroup group = TopBetweennessPlacement(
            evaluator, *in.od, k, ParseWeightMode(bc_mode), alpha);
        if (format != Format::kJson) {
          throw UnsupportedFormat("bctopk result has no csv form");
        }
        Json j;
        j["algorithm"] = "bctopk";
        for (const auto& [key, value] : ToJson(group).items()) j[key] = value;
        run.output = DumpJson(j);
      }
      return run;
    };
  });

  // curve ------------------------------------------------------------------
  std::string scheme = "gbc_greedy";
  int k_max = 10;
  double curve_alpha = 0.25;
  auto* curve = app.add_subcommand(
      "curve", "Coverage fraction against unit count for a deployment scheme");
  AddNetworkOptions(curve, common, true);
  AddOutputOptions(curve, common);
  AddModeOption(curve, common, "Route length for coverage");
  AddWorkersOption(curve, common);
  curve->add_option("--scheme", scheme, "gbc_greedy | bc_topk | random")
      ->capture_default_str()
      ->check(CLI::IsMember({"gbc_greedy", "bc_topk", "random"}));
  curve->add_option("--k-max", k_max, "Largest unit count (count)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  curve->add_option("--bc-mode", bc_mode, "bc_topk: ranking path length")
      ->capture_default_str()
      ->check(CLI::IsMember({"hops", "ft", "ct"}));
  curve->add_option("--alpha", curve_alpha, "bc_topk: blend alpha in [0,1]")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  curve->add_option("--seed", common.seed, "random: seed")->capture_default_str();
  curve->add_option("--reps", reps, "random: repetitions (count)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  curve->callback([&] {
    action = [&] {
      Run run;
      Loaded in = LoadInputs(common, run);
      const GroupCoverageEvaluator evaluator(
          in.network, *in.od, ParseWeightMode(common.mode), common.workers);
      CurveConfig config;
      config.bc_mode = ParseWeightMode(bc_mode);
      config.alpha = curve_alpha;
      config.seed = common.seed;
      config.repetitions = reps;
      const Format format = ChosenFormat(common, Format::kCsv);
      run.format = ToString(format);
      run.output = Emit(BuildCoverageCurve(evaluator, *in.od,
                                           ParseCurveScheme(scheme), k_max,
                                           config),
                        format);
      return run;
    };
  });

  // fit --------------------------------------------------------------------
  std::string curve_path;
  auto* fit = app.add_subcommand(
      "fit", "Least-squares Gompertz fit a*exp(b*exp(c*n)) of a coverage curve");
  AddOutputOptions(fit, common);
  fit->add_option("--curve", curve_path,
                  "Coverage curve CSV (n,coverage[,scheme]); coverage as a "
                  "fraction in [0,1]")
      ->required()
      ->check(CLI::ExistingFile);
  fit->callback([&] {
    action = [&] {
      Run run;
      run.inputs.push_back(curve_path);
      const CoverageCurve c = ParseCoverageCurveCsv(ReadFile(curve_path));
      std::vector<std::pair<double, double>> pts;
      for (const CoveragePoint& p : c.points) pts.emplace_back(p.n, p.coverage);
      const Format format = ChosenFormat(common, Format::kJson);
      run.format = ToString(format);
      run.output = Emit(FitGompertz(pts), format);
      return run;
    };
  });

  // optimize ---------------------------------------------------------------
  std::optional<double> pa, pb, pc;
  std::string params_path, sampling_text = "power:2", catalog_path;
  double c_attack = 0.0, cost_base = 0.0;
  bool case_study = false;
  auto* optimize = app.add_subcommand(
      "optimize", "Plan unit count and unit cost maximizing normalized benefit");
  AddOutputOptions(optimize, common);
  optimize->add_option("--a", pa, "Gompertz a: coverage ceiling in (0,1]");
  optimize->add_option("--b", pb, "Gompertz b < 0 (dimensionless)");
  optimize->add_option("--c", pc, "Gompertz c < 0 (per unit)");
  optimize
      ->add_option("--params", params_path,
                   "Fit result JSON with a, b, c (instead of --a --b --c)")
      ->check(CLI::ExistingFile);
  optimize->add_option("--c-attack", c_attack,
                       "Expected damage of an undetected attack (currency)")
      ->required()
      ->check(CLI::PositiveNumber);
  optimize->add_option("--cost-base", cost_base,
                       "Cost of the best unit model (currency per unit)")
      ->required()
      ->check(CLI::PositiveNumber);
  optimize->add_option("--sampling", sampling_text,
                       "Sampling quality vs cost ratio: power:<p> or "
                       "table:<csv with cost_ratio,sampling>")
      ->capture_default_str();
  optimize->add_option("--catalog", catalog_path,
                       "Available unit costs, CSV with a cost column "
                       "(currency per unit)")
      ->check(CLI::ExistingFile);
  optimize->add_flag("--case-study", case_study,
                     "Also print the published closed-form case-study "
                     "coefficients (diagnostic only)");
  optimize->callback([&] {
    action = [&] {
      Run run;
      GompertzParams params;
      if (!params_path.empty()) {
        run.inputs.push_back(params_path);
        Json j;
        try {
          j = Json::parse(ReadFile(params_path));
          params = {j.at("a").get<double>(), j.at("b").get<double>(),
                    j.at("c").get<double>()};
        } catch (const Json::exception& e) {
          throw InputError("bad params file: " + std::string(e.what()));
        }
      }
      if (pa) params.a = *pa;
      if (pb) params.b = *pb;
      if (pc) params.c = *pc;
      if (params_path.empty() && !(pa && pb && pc)) {
        throw InputError("give --a --b --c or --params");
      }
      ValidateGompertz(params);
      if (sampling_text.rfind("table:", 0) == 0) {
        run.inputs.push_back(sampling_text.substr(6));
      }
      const SamplingModel sampling = ParseSamplingModel(sampling_text);
      ThreatScenario scenario{c_attack, cost_base, std::nullopt};
      if (!catalog_path.empty()) {
        run.inputs.push_back(catalog_path);
        scenario.catalog = LoadCostCatalogFile(catalog_path);
      }
      if (ChosenFormat(common, Format::kJson) != Format::kJson) {
        throw UnsupportedFormat("optimize output has no csv form");
      }
      run.format = "json";
      const FleetPlan plan = PlanFleet(params, scenario, sampling);
      Json j;
      j["plan"] = ToJson(plan);
      j["unit_count"] = ToJson(OptimalUnitCount(
          params, plan.unit_cost, c_attack,
          plan.sampling > 0.0 ? plan.sampling : 1.0));
      j["stationary_points"] = Json::array();
      for (const StationaryCost& p :
           OptimalUnitCost(params, scenario, sampling)) {
        j["stationary_points"].push_back(ToJson(p));
      }
      if (case_study) {
        try {
          j["printed_case_study"] =
              ToJson(PrintedCaseStudyFormula(params, cost_base, c_attack));
        } catch (const InputError& e) {
          j["printed_case_study"] = nullptr;
        }
      }
      run.output = DumpJson(j);
      if (plan.n_units == 0) run.exit_code = kExitDegenerate;
      return run;
    };
  });

  // simulate ---------------------------------------------------------------
  std::string monitors_text;
  double q = 1.0;
  std::int64_t samples = 100000;
  bool exact = false;
  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo detection coverage of OD trips by monitors");
  AddNetworkOptions(simulate, common, true);
  AddOutputOptions(simulate, common);
  AddModeOption(simulate, common, "Route length");
  AddWorkersOption(simulate, common);
  simulate->add_option("--monitors", monitors_text,
                       "Comma-separated monitor node ids")
      ->required();
  simulate->add_option("--q", q, "Per-monitor sampling rate in [0,1]")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--samples", samples, "Simulated trips (count)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", common.seed, "Seed")->capture_default_str();
  simulate->add_flag("--exact", exact,
                     "Also report exact coverage by shortest-path enumeration");
  simulate->callback([&] {
    action = [&] {
      Run run;
      Loaded in = LoadInputs(common, run);
      const std::vector<NodeId> monitors = ParseIdList(monitors_text);
      const WeightMode mode = ParseWeightMode(common.mode);
      DetectionConfig config{q, samples, common.seed};
      Json j = ToJson(EstimateCoverage(in.network, *in.od, monitors, config,
                                       mode, common.workers));
      if (exact) {
        j["exact_coverage"] = ExactCoverage(in.network, *in.od, monitors, q, mode);
      }
      if (ChosenFormat(common, Format::kJson) != Format::kJson) {
        throw UnsupportedFormat("coverage estimate has no csv form");
      }
      run.format = "json";
      run.output = DumpJson(j);
      return run;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  try {
    const Run run = action();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    WriteOutputs(sub, common, run, elapsed);
    return run.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fleetplan " << sub->get_name() << ": " << e.what() << "\n";
  } catch (const GuardExceeded& e) {
    std::cerr << "fleetplan " << sub->get_name() << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "fleetplan " << sub->get_name() << ": internal error: "
              << e.what() << "\n";
  }
  return kExitInput;
}

}  // namespace fleetplan

int main(int argc, char** argv) { return fleetplan::Main(argc, argv); }
