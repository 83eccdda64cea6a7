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

#include <sstream>

#include "csv.h"

namespace fleetplan {
namespace {

using internal::FormatDouble;

template <typename T>
Json Optional(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

[[noreturn]] void Unsupported(const char* kind, Format format) {
  throw UnsupportedFormat(std::string(kind) + " has no " + ToString(format) +
                          " form");
}

std::string JsonOnly(const Json& json, const char* kind, Format format) {
  if (format != Format::kJson) Unsupported(kind, format);
  return DumpJson(json);
}

// Rows of already formatted cells under a header.
class CsvTable {
 public:
  explicit CsvTable(const std::string& header) { out_ << header << '\n'; }

  template <typename... Cells>
  void Row(const Cells&... cells) {
    bool first = true;
    ((out_ << (first ? "" : ",") << Cell(cells), first = false), ...);
    out_ << '\n';
  }

  std::string str() const { return out_.str(); }

 private:
  static std::string Cell(double v) { return FormatDouble(v); }
  static std::string Cell(const std::string& v) { return v; }
  static std::string Cell(const char* v) { return v; }
  static std::string Cell(int v) { return std::to_string(v); }
  static std::string Cell(std::int64_t v) { return std::to_string(v); }
  static std::string Cell(std::uint64_t v) { return std::to_string(v); }
  static std::string Cell(const std::optional<double>& v) {
    return v ? FormatDouble(*v) : std::string();
  }

  std::ostringstream out_;
};

}  // namespace

std::string ToString(Format format) {
  return format == Format::kJson ? "json" : "csv";
}

Format ParseFormat(const std::string& text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  throw InputError("format must be json or csv");
}

Json ToJson(const FleetPlan& plan) {
  Json j;
  j["n_units"] = plan.n_units;
  j["unit_cost"] = plan.unit_cost;
  j["sampling"] = plan.sampling;
  j["omega"] = plan.omega;
  j["method"] = ToString(plan.method);
  return j;
}

Json ToJson(const UnitCountSolution& s) {
  Json j;
  j["gamma"] = s.gamma;
  j["feasible"] = s.feasible;
  j["w1"] = Optional(s.w1);
  j["w2"] = Optional(s.w2);
  j["n1"] = Optional(s.n1);
  j["n2"] = Optional(s.n2);
  j["omega1"] = Optional(s.omega1);
  j["omega2"] = Optional(s.omega2);
  j["n1_nonnegative"] = s.n1_nonnegative;
  j["n2_nonnegative"] = s.n2_nonnegative;
  j["closed_form_n"] = s.closed_form_n;
  j["recommended_n"] = s.recommended_n;
  j["recommended_omega"] = s.recommended_omega;
  j["closed_form_agrees"] = s.closed_form_agrees;
  j["n_cap"] = s.n_cap;
  return j;
}

Json ToJson(const StationaryCost& p) {
  Json j;
  j["cost"] = p.cost;
  j["gamma"] = p.gamma;
  j["branch"] = ToString(p.branch);
  j["condition"] = ToString(p.condition);
  j["classification"] = ToString(p.classification);
  j["omega"] = p.omega;
  return j;
}

Json ToJson(const PrintedCaseStudy& s) {
  Json j;
  j["gamma_opt"] = s.gamma_opt;
  j["cost_coefficient"] = s.cost_coefficient;
  j["lambert_coefficient"] = s.lambert_coefficient;
  j["w_coefficient"] = s.w_coefficient;
  j["constant_term"] = s.constant_term;
  j["log_coefficient"] = s.log_coefficient;
  j["optimal_cost"] = s.optimal_cost;
  j["n1"] = Optional(s.n1);
  j["n2"] = Optional(s.n2);
  return j;
}

Json ToJson(const GompertzParams& p) {
  Json j;
  j["a"] = p.a;
  j["b"] = p.b;
  j["c"] = p.c;
  return j;
}

Json ToJson(const FitResult& fit) {
  Json j = ToJson(fit.params);
  j["r_squared"] = fit.r_squared;
  j["residual_norm"] = fit.residual_norm;
  j["iterations"] = fit.iterations;
  return j;
}

Json ToJson(const CoverageEstimate& e) {
  Json j;
  j["mean"] = e.mean;
  j["std_error"] = e.std_error;
  j["samples"] = e.samples;
  j["seed"] = e.seed;
  return j;
}

Json ToJson(const MonitorGroup& g) {
  Json j;
  j["members"] = g.members;
  j["gbc_value"] = g.gbc_value;
  j["coverage_fraction"] = g.coverage_fraction;
  return j;
}

Json ToJson(const SearchResult& r) {
  Json j;
  j["algorithm"] = ToString(r.algorithm);
  j["members"] = r.group.members;
  j["gbc_value"] = r.group.gbc_value;
  j["coverage_fraction"] = r.group.coverage_fraction;
  j["certificate"] = r.certificate;
  j["upper_bound"] = r.upper_bound;
  j["completed"] = r.completed;
  j["expansions"] = r.expansions;
  j["elapsed_s"] = r.elapsed_s;
  return j;
}

Json ToJson(const std::vector<GreedyStep>& steps) {
  Json j = Json::array();
  for (const GreedyStep& s : steps) {
    j.push_back({{"node", s.node},
                 {"marginal_gain", s.marginal_gain},
                 {"cumulative", s.cumulative}});
  }
  return j;
}

Json ToJson(const RandomBaselineResult& r) {
  Json j;
  j["seed"] = r.seed;
  j["mean_value"] = r.mean_value;
  j["mean_coverage"] = r.mean_coverage;
  j["values"] = r.values;
  return j;
}

Json ToJson(const CoverageCurve& curve) {
  Json j;
  j["scheme"] = ToString(curve.scheme);
  j["points"] = Json::array();
  for (const CoveragePoint& p : curve.points) {
    j["points"].push_back({{"n", p.n}, {"coverage", p.coverage}});
  }
  return j;
}

Json ToJson(const StructuralSummary& s) {
  Json j;
  j["node_count"] = s.node_count;
  j["directed_edge_count"] = s.directed_edge_count;
  j["undirected_edge_count"] = s.undirected_edge_count;
  j["equivalence_class_count"] = s.equivalence_class_count;
  j["largest_equivalence_class"] = s.largest_equivalence_class;
  j["bcc_count"] = s.bcc_count;
  j["avg_bcc_size"] = s.avg_bcc_size;
  j["largest_bcc"] = s.largest_bcc;
  return j;
}

Json ToJson(const std::vector<FlowBalance>& balances) {
  Json j = Json::array();
  for (const FlowBalance& b : balances) {
    j.push_back({{"node", b.node},
                 {"inbound_flow", b.inbound_flow},
                 {"outbound_flow", b.outbound_flow},
                 {"imbalance", b.imbalance}});
  }
  return j;
}

Json ToJson(const Histogram& h) {
  Json j;
  j["edges"] = h.edges;
  j["counts"] = h.counts;
  j["below"] = h.below;
  j["above"] = h.above;
  return j;
}

Json ToJson(const std::vector<GroupCorrelation>& groups) {
  Json j = Json::array();
  for (const GroupCorrelation& g : groups) {
    j.push_back(
        {{"group", g.group}, {"n", g.n}, {"r_squared", Optional(g.r_squared)}});
  }
  return j;
}

Json ToJson(const CentralityScores& scores, const Network& network) {
  Json j;
  j["mode"] = ToString(scores.mode);
  j["od_weighted"] = scores.od_weighted;
  j["alpha"] = Optional(scores.alpha);
  j["unreachable_pairs"] = scores.unreachable_pairs;
  j["unreachable_demand"] = scores.unreachable_demand;
  j["scores"] = Json::array();
  for (int v = 0; v < network.num_nodes(); ++v) {
    j["scores"].push_back({{"node", network.id(v)}, {"score", scores.scores[v]}});
  }
  return j;
}

std::string DumpJson(const Json& json) { return json.dump(2) + "\n"; }

std::string Emit(const FleetPlan& plan, Format format) {
  return JsonOnly(ToJson(plan), "fleet plan", format);
}

std::string Emit(const UnitCountSolution& solution, Format format) {
  return JsonOnly(ToJson(solution), "unit count solution", format);
}

std::string Emit(const std::vector<StationaryCost>& points, Format format) {
  if (format == Format::kJson) {
    Json j = Json::array();
    for (const StationaryCost& p : points) j.push_back(ToJson(p));
    return DumpJson(j);
  }
  CsvTable t("cost,gamma,branch,condition,classification,omega");
  for (const StationaryCost& p : points) {
    t.Row(p.cost, p.gamma, ToString(p.branch), ToString(p.condition),
          ToString(p.classification), p.omega);
  }
  return t.str();
}

std::string Emit(const FitResult& fit, Format format) {
  return JsonOnly(ToJson(fit), "fit result", format);
}

std::string Emit(const CoverageEstimate& estimate, Format format) {
  return JsonOnly(ToJson(estimate), "coverage estimate", format);
}

std::string Emit(const MonitorGroup& group, Format format) {
  return JsonOnly(ToJson(group), "monitor group", format);
}

std::string Emit(const SearchResult& result, Format format) {
  return JsonOnly(ToJson(result), "search result", format);
}

std::string Emit(const std::vector<GreedyStep>& steps, Format format) {
  if (format == Format::kJson) return DumpJson(ToJson(steps));
  CsvTable t("step,node,marginal_gain,cumulative");
  for (size_t i = 0; i < steps.size(); ++i) {
    t.Row(static_cast<int>(i + 1), steps[i].node, steps[i].marginal_gain,
          steps[i].cumulative);
  }
  return t.str();
}

std::string Emit(const RandomBaselineResult& result, Format format) {
  if (format == Format::kJson) return DumpJson(ToJson(result));
  CsvTable t("repetition,value");
  for (size_t i = 0; i < result.values.size(); ++i) {
    t.Row(static_cast<int>(i), result.values[i]);
  }
  return t.str();
}

std::string Emit(const CoverageCurve& curve, Format format) {
  if (format == Format::kJson) return DumpJson(ToJson(curve));
  CsvTable t("n,coverage,scheme");
  const std::string scheme = ToString(curve.scheme);
  for (const CoveragePoint& p : curve.points) t.Row(p.n, p.coverage, scheme);
  return t.str();
}

std::string Emit(const StructuralSummary& summary, Format format) {
  return JsonOnly(ToJson(summary), "structural summary", format);
}

std::string Emit(const std::vector<FlowBalance>& balances, Format format) {
  if (format == Format::kJson) return DumpJson(ToJson(balances));
  CsvTable t("node,inbound_flow,outbound_flow,imbalance");
  for (const FlowBalance& b : balances) {
    t.Row(b.node, b.inbound_flow, b.outbound_flow, b.imbalance);
  }
  return t.str();
}

std::string Emit(const Histogram& histogram, Format format) {
  if (format == Format::kJson) return DumpJson(ToJson(histogram));
  CsvTable t("lower,upper,count");
  for (size_t i = 0; i < histogram.counts.size(); ++i) {
    t.Row(histogram.edges[i], histogram.edges[i + 1], histogram.counts[i]);
  }
  return t.str();
}

std::string Emit(const std::vector<GroupCorrelation>& groups, Format format) {
  if (format == Format::kJson) return DumpJson(ToJson(groups));
  CsvTable t("group,n,r_squared");
  for (const GroupCorrelation& g : groups) t.Row(g.group, g.n, g.r_squared);
  return t.str();
}

std::string Emit(const CentralityScores& scores, const Network& network,
                 Format format) {
  if (format == Format::kJson) return DumpJson(ToJson(scores, network));
  CsvTable t("node,score");
  for (int v = 0; v < network.num_nodes(); ++v) {
    t.Row(network.id(v), scores.scores[v]);
  }
  return t.str();
}

CoverageCurve ParseCoverageCurveCsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InputError("coverage curve is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  const auto header = internal::SplitCsvLine(line);
  int n_col = -1, cov_col = -1, scheme_col = -1;
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "n") n_col = static_cast<int>(i);
    if (header[i] == "coverage") cov_col = static_cast<int>(i);
    if (header[i] == "scheme") scheme_col = static_cast<int>(i);
  }
  if (n_col < 0 || cov_col < 0) {
    throw InputError("coverage curve needs columns n and coverage");
  }
  CoverageCurve curve;
  std::optional<std::string> scheme;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto fields = internal::SplitCsvLine(line);
    const int needed = std::max({n_col, cov_col, scheme_col}) + 1;
    if (static_cast<int>(fields.size()) < needed) {
      throw RowError(line_no, "too few columns");
    }
    CoveragePoint p;
    try {
      size_t used = 0;
      const std::string n_text(fields[n_col]);
      p.n = std::stoi(n_text, &used);
      if (used != n_text.size()) throw InputError("");
      const std::string c_text(fields[cov_col]);
      p.coverage = std::stod(c_text, &used);
      if (used != c_text.size()) throw InputError("");
    } catch (const std::exception&) {
      throw RowError(line_no, "malformed number");
    }
    if (scheme_col >= 0) {
      const std::string s(fields[scheme_col]);
      if (scheme && *scheme != s) {
        throw RowError(line_no, "mixed schemes in one curve");
      }
      scheme = s;
    }
    curve.points.push_back(p);
  }
  if (scheme) curve.scheme = ParseCurveScheme(*scheme);
  return curve;
}

}  // namespace fleetplan
