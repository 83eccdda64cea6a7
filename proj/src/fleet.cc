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

#include "fleetplan/fleet.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include "csv.h"
#include "fleetplan/error.h"

namespace fleetplan {
namespace {

constexpr double kBoundarySlack = 1e-12;
constexpr std::int64_t kMaxUnitCap = 100'000'000;
constexpr int kResidualGrid = 2000;
constexpr double kResidualGridLow = 1e-9;
constexpr int kPlanGrid = 600;
constexpr double kPlanGridLow = 1e-6;
constexpr int kRefinedCells = 5;
constexpr int kGoldenIterations = 80;
constexpr double kPerturbation = 0.01;

void RequirePositive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InputError(std::string(name) + " must be positive and finite");
  }
}

// Lambert argument b gamma, pulled onto the branch point when it lies
// within the boundary slack below it.
std::optional<double> LambertArgument(double arg) {
  const double bp = LambertBranchPoint();
  if (arg >= bp) return arg;
  if (arg >= bp * (1.0 + kBoundarySlack)) return bp;
  return std::nullopt;
}

struct CostState {
  double gamma = 0.0;
  double w = 0.0;
  double ratio = 0.0;
};

std::optional<CostState> StateAt(const GompertzParams& params,
                                 const ThreatScenario& scenario,
                                 const SamplingModel& sampling,
                                 LambertBranch branch, double cost) {
  if (!(cost > 0.0)) return std::nullopt;
  const double ratio = cost / scenario.cost_base;
  const double s = sampling(ratio);
  if (!(s > 0.0)) return std::nullopt;
  CostState st;
  st.ratio = ratio;
  st.gamma = cost / (params.a * params.b * params.c * scenario.c_attack * s);
  const auto arg = LambertArgument(params.b * st.gamma);
  if (!arg) return std::nullopt;
  st.w = LambertW(branch, *arg);
  return st;
}

// Root of g on [lo, hi] in log space; g(lo) and g(hi) have opposite signs.
template <typename F>
double BisectLog(F&& g, double lo, double hi, double g_lo) {
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < 200 && lhi - llo > 1e-15 * std::max(1.0, std::abs(llo));
       ++i) {
    const double mid = 0.5 * (llo + lhi);
    const auto gm = g(std::exp(mid));
    if (!gm) {
      lhi = mid;
      continue;
    }
    if (*gm == 0.0) return std::exp(mid);
    if ((*gm < 0.0) == (g_lo < 0.0)) {
      llo = mid;
      g_lo = *gm;
    } else {
      lhi = mid;
    }
  }
  return std::exp(0.5 * (llo + lhi));
}

std::vector<double> LogGrid(double lo, double hi, int points) {
  std::vector<double> grid(points);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < points; ++i) {
    grid[i] = std::exp(llo + (lhi - llo) * i / (points - 1));
  }
  grid.back() = hi;
  return grid;
}

// Best (n, omega) for unit cost ratio x in base-normalized currency.
struct Candidate {
  double ratio = 0.0;
  std::int64_t n = 0;
  double omega = 0.0;
  bool agrees = false;
};

Candidate Evaluate(const GompertzParams& params, double c_norm,
                   const SamplingModel& sampling, double ratio) {
  Candidate cand;
  cand.ratio = ratio;
  const double s = sampling(ratio);
  if (!(s > 0.0)) {
    cand.agrees = true;
    return cand;
  }
  const UnitCountSolution sol = OptimalUnitCount(params, ratio, c_norm, s);
  cand.n = sol.recommended_n;
  cand.omega = sol.recommended_omega;
  cand.agrees = sol.closed_form_agrees;
  return cand;
}

bool Better(const Candidate& x, const Candidate& y) {
  if (x.omega != y.omega) return x.omega > y.omega;
  if (x.ratio != y.ratio) return x.ratio < y.ratio;
  return x.n < y.n;
}

}  // namespace

SamplingModel SamplingModel::Power(double exponent) {
  RequirePositive(exponent, "sampling exponent");
  SamplingModel m;
  m.exponent_ = exponent;
  return m;
}

SamplingModel SamplingModel::Table(
    std::vector<std::pair<double, double>> points) {
  if (points.empty()) throw InputError("sampling table is empty");
  for (size_t i = 0; i < points.size(); ++i) {
    const auto [x, s] = points[i];
    if (!(x > 0.0 && x <= 1.0)) {
      throw InputError("sampling table cost ratios must be in (0, 1]");
    }
    if (!(s > 0.0 && s <= 1.0)) {
      throw InputError("sampling table values must be in (0, 1]");
    }
    if (i > 0 && !(x > points[i - 1].first)) {
      throw InputError("sampling table cost ratios must be increasing");
    }
    if (i > 0 && s < points[i - 1].second) {
      throw InputError("sampling table values must be nondecreasing");
    }
  }
  SamplingModel m;
  m.table_ = std::move(points);
  return m;
}

double SamplingModel::operator()(double ratio) const {
  if (!(ratio > 0.0)) return 0.0;
  if (exponent_) return std::pow(ratio, *exponent_);
  const auto& t = table_;
  if (ratio <= t.front().first) return t.front().second * ratio / t.front().first;
  if (ratio >= t.back().first) return t.back().second;
  const auto it = std::upper_bound(
      t.begin(), t.end(), ratio,
      [](double r, const std::pair<double, double>& p) { return r < p.first; });
  const auto& [x1, s1] = *it;
  const auto& [x0, s0] = *(it - 1);
  return s0 + (s1 - s0) * (ratio - x0) / (x1 - x0);
}

double SamplingModel::Derivative(double ratio) const {
  if (exponent_) return *exponent_ * std::pow(ratio, *exponent_ - 1.0);
  const double h = 1e-6 * std::max(ratio, 1e-12);
  return ((*this)(ratio + h) - (*this)(ratio - h)) / (2.0 * h);
}

double SamplingModel::Elasticity(double ratio) const {
  if (exponent_) return *exponent_;
  return ratio * Derivative(ratio) / (*this)(ratio);
}

std::string SamplingModel::Describe() const {
  if (exponent_) return "power:" + internal::FormatDouble(*exponent_);
  return "table:" + std::to_string(table_.size()) + "_points";
}

SamplingModel ParseSamplingModel(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw InputError("sampling must be power:<p> or table:<path>");
  }
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (kind == "power") {
    size_t used = 0;
    double p = 0.0;
    try {
      p = std::stod(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) {
      throw InputError("bad sampling exponent: " + rest);
    }
    return SamplingModel::Power(p);
  }
  if (kind == "table") {
    std::ifstream in(rest);
    if (!in) throw InputError("cannot open sampling table: " + rest);
    internal::CsvReader reader(in, {"cost_ratio", "sampling"});
    std::vector<std::pair<double, double>> points;
    while (reader.Next()) {
      points.emplace_back(reader.GetDouble(0), reader.GetDouble(1));
    }
    return SamplingModel::Table(std::move(points));
  }
  throw InputError("unknown sampling family: " + kind);
}

std::vector<double> LoadCostCatalogFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog: " + path);
  internal::CsvReader reader(in, {"cost"});
  std::vector<double> costs;
  while (reader.Next()) {
    const double cost = reader.GetDouble(0);
    if (!(cost > 0.0)) throw RowError(reader.line(), "cost must be positive");
    costs.push_back(cost);
  }
  if (costs.empty()) throw InputError("catalog is empty");
  return costs;
}

bool IsFeasible(double cost_per_unit, double c_attack,
                const GompertzParams& params) {
  const double threshold = -params.a * params.c / std::numbers::e;
  return cost_per_unit / c_attack <= threshold * (1.0 + kBoundarySlack);
}

double NormalizedBenefit(const GompertzParams& params, double n,
                         double cost_per_unit, double c_attack,
                         double sampling) {
  return c_attack * sampling * GompertzValue(params, n) - n * cost_per_unit;
}

std::int64_t UnitCountCap(const GompertzParams& params, double cost_per_unit,
                          double c_attack, double sampling) {
  const double eps = cost_per_unit / (c_attack * sampling * params.a);
  if (eps >= 1.0) return 0;
  // a - M(n) <= eps a  <=>  e^{cn} <= log(1 - eps) / b.
  const double q = std::log1p(-eps) / params.b;
  if (q >= 1.0) return 0;
  const double n = std::ceil(std::log(q) / params.c);
  if (!(n <= static_cast<double>(kMaxUnitCap))) {
    throw InputError("unit count search would exceed 1e8 units");
  }
  return static_cast<std::int64_t>(n);
}

UnitCountSolution OptimalUnitCount(const GompertzParams& params,
                                   double cost_per_unit, double c_attack,
                                   double sampling) {
  ValidateGompertz(params);
  RequirePositive(cost_per_unit, "cost per unit");
  RequirePositive(c_attack, "c_attack");
  RequirePositive(sampling, "sampling");

  const auto omega = [&](double n) {
    return NormalizedBenefit(params, n, cost_per_unit, c_attack, sampling);
  };

  UnitCountSolution sol;
  const double ratio = cost_per_unit / (c_attack * sampling);
  sol.gamma = ratio / (params.a * params.b * params.c);
  const auto arg = LambertArgument(params.b * sol.gamma);
  sol.feasible = arg.has_value();

  std::vector<std::int64_t> closed = {0};
  if (arg) {
    const double log_gamma = std::log(sol.gamma);
    sol.w1 = LambertW(LambertBranch::kPrincipal, *arg);
    sol.w2 = LambertW(LambertBranch::kMinusOne, *arg);
    sol.n1 = (log_gamma - *sol.w1) / params.c;
    sol.n2 = (log_gamma - *sol.w2) / params.c;
    const double scale = cost_per_unit / params.c;
    sol.omega1 = scale * (*sol.w1 + 1.0 / *sol.w1 - log_gamma);
    sol.omega2 = scale * (*sol.w2 + 1.0 / *sol.w2 - log_gamma);
    sol.n1_nonnegative = *sol.n1 >= 0.0;
    sol.n2_nonnegative = *sol.n2 >= 0.0;
    for (const auto& root : {sol.n1, sol.n2}) {
      if (*root < 0.0) continue;
      closed.push_back(static_cast<std::int64_t>(std::floor(*root)));
      closed.push_back(static_cast<std::int64_t>(std::ceil(*root)));
    }
  }
  std::sort(closed.begin(), closed.end());
  double closed_best = -std::numeric_limits<double>::infinity();
  for (const std::int64_t n : closed) {
    const double v = omega(static_cast<double>(n));
    if (v > closed_best) {
      closed_best = v;
      sol.closed_form_n = n;
    }
  }

  sol.n_cap = UnitCountCap(params, cost_per_unit, c_attack, sampling);
  sol.recommended_n = 0;
  sol.recommended_omega = omega(0.0);
  for (std::int64_t n = 1; n <= sol.n_cap; ++n) {
    const double v = omega(static_cast<double>(n));
    if (v > sol.recommended_omega) {
      sol.recommended_omega = v;
      sol.recommended_n = n;
    }
  }
  sol.closed_form_agrees = sol.closed_form_n == sol.recommended_n;
  return sol;
}

std::string ToString(StationaryCondition condition) {
  return condition == StationaryCondition::kPrinted ? "printed" : "envelope";
}

std::string ToString(Extremum extremum) {
  switch (extremum) {
    case Extremum::kMax:
      return "max";
    case Extremum::kMin:
      return "min";
    case Extremum::kSaddle:
      break;
  }
  return "saddle";
}

std::optional<double> StationaryResidual(const GompertzParams& params,
                                         const ThreatScenario& scenario,
                                         const SamplingModel& sampling,
                                         LambertBranch branch,
                                         StationaryCondition condition,
                                         double cost) {
  const auto st = StateAt(params, scenario, sampling, branch, cost);
  if (!st) return std::nullopt;
  const double e = sampling.Elasticity(st->ratio);
  const double term = condition == StationaryCondition::kPrinted ? 1.0 - e : e;
  return st->w - std::log(st->gamma) + term / st->w;
}

std::optional<double> BranchBenefit(const GompertzParams& params,
                                    const ThreatScenario& scenario,
                                    const SamplingModel& sampling,
                                    LambertBranch branch, double cost) {
  const auto st = StateAt(params, scenario, sampling, branch, cost);
  if (!st) return std::nullopt;
  return cost / params.c * (st->w + 1.0 / st->w - std::log(st->gamma));
}

std::vector<StationaryCost> OptimalUnitCost(const GompertzParams& params,
                                            const ThreatScenario& scenario,
                                            const SamplingModel& sampling) {
  ValidateGompertz(params);
  RequirePositive(scenario.c_attack, "c_attack");
  RequirePositive(scenario.cost_base, "cost_base");
  const std::vector<double> grid =
      LogGrid(scenario.cost_base * kResidualGridLow, scenario.cost_base,
              kResidualGrid);

  std::vector<StationaryCost> out;
  for (const LambertBranch branch :
       {LambertBranch::kPrincipal, LambertBranch::kMinusOne}) {
    for (const StationaryCondition condition :
         {StationaryCondition::kPrinted, StationaryCondition::kEnvelope}) {
      const auto g = [&](double cost) {
        return StationaryResidual(params, scenario, sampling, branch,
                                  condition, cost);
      };
      std::vector<double> roots;
      std::optional<double> prev;
      for (size_t i = 0; i < grid.size(); ++i) {
        const auto gi = g(grid[i]);
        if (gi && *gi == 0.0) {
          roots.push_back(grid[i]);
        } else if (gi && prev && *prev != 0.0 && (*gi < 0.0) != (*prev < 0.0)) {
          roots.push_back(BisectLog(g, grid[i - 1], grid[i], *prev));
        }
        prev = gi;
      }
      for (const double cost : roots) {
        const auto st = StateAt(params, scenario, sampling, branch, cost);
        const auto residual = g(cost);
        if (!st || !residual) continue;
        // Sign changes across a discontinuity of a table's elasticity are
        // not roots.
        const double size =
            1.0 + std::abs(st->w) + std::abs(std::log(st->gamma)) +
            std::abs(1.0 / st->w) * (1.0 + sampling.Elasticity(st->ratio));
        if (std::abs(*residual) > 1e-6 * size) continue;
        if (!out.empty() && out.back().branch == branch &&
            out.back().condition == condition &&
            std::abs(out.back().cost - cost) <= 1e-9 * cost) {
          continue;
        }
        StationaryCost sc;
        sc.cost = cost;
        sc.gamma = st->gamma;
        sc.branch = branch;
        sc.condition = condition;
        sc.omega = *BranchBenefit(params, scenario, sampling, branch, cost);
        const auto lo = BranchBenefit(params, scenario, sampling, branch,
                                      cost * (1.0 - kPerturbation));
        const auto hi = BranchBenefit(params, scenario, sampling, branch,
                                      cost * (1.0 + kPerturbation));
        if (lo && hi && sc.omega >= *lo && sc.omega >= *hi) {
          sc.classification = Extremum::kMax;
        } else if (lo && hi && sc.omega <= *lo && sc.omega <= *hi) {
          sc.classification = Extremum::kMin;
        } else {
          sc.classification = Extremum::kSaddle;
        }
        out.push_back(sc);
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const StationaryCost& x, const StationaryCost& y) {
                     return x.cost < y.cost;
                   });
  return out;
}

std::string ToString(PlanMethod method) {
  switch (method) {
    case PlanMethod::kClosedForm:
      return "closed_form";
    case PlanMethod::kGridVerified:
      return "grid_verified";
    case PlanMethod::kBoundary:
      break;
  }
  return "boundary";
}

FleetPlan PlanFleet(const GompertzParams& params,
                    const ThreatScenario& scenario,
                    const SamplingModel& sampling) {
  ValidateGompertz(params);
  RequirePositive(scenario.c_attack, "c_attack");
  RequirePositive(scenario.cost_base, "cost_base");
  const double base = scenario.cost_base;
  const double c_norm = scenario.c_attack / base;
  const auto eval = [&](double ratio) {
    return Evaluate(params, c_norm, sampling, ratio);
  };

  ThreatScenario normalized{c_norm, 1.0, std::nullopt};
  std::vector<double> stationary;
  for (const StationaryCost& sc : OptimalUnitCost(params, normalized, sampling)) {
    stationary.push_back(sc.cost);
  }

  // Continuous optimum over the cost ratio.
  Candidate best = eval(1.0);
  bool best_stationary = false;
  const auto consider = [&](const Candidate& cand, bool is_stationary) {
    if (Better(cand, best)) {
      best = cand;
      best_stationary = is_stationary;
    }
  };
  for (const double r : stationary) consider(eval(r), true);

  const std::vector<double> grid = LogGrid(kPlanGridLow, 1.0, kPlanGrid);
  std::vector<Candidate> cells;
  cells.reserve(grid.size());
  for (const double r : grid) {
    cells.push_back(eval(r));
    consider(cells.back(), false);
  }
  std::vector<size_t> peaks;
  for (size_t i = 0; i < cells.size(); ++i) {
    const bool left = i == 0 || cells[i].omega >= cells[i - 1].omega;
    const bool right =
        i + 1 == cells.size() || cells[i].omega >= cells[i + 1].omega;
    if (left && right) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](size_t x, size_t y) {
    return cells[x].omega > cells[y].omega;
  });
  if (peaks.size() > kRefinedCells) peaks.resize(kRefinedCells);
  constexpr double kInvPhi = 0.6180339887498949;
  for (const size_t i : peaks) {
    double lo = std::log(grid[i == 0 ? 0 : i - 1]);
    double hi = std::log(grid[std::min(i + 1, grid.size() - 1)]);
    double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
    Candidate c1 = eval(std::exp(x1)), c2 = eval(std::exp(x2));
    for (int it = 0; it < kGoldenIterations; ++it) {
      if (c1.omega >= c2.omega) {
        hi = x2;
        x2 = x1;
        c2 = c1;
        x1 = hi - kInvPhi * (hi - lo);
        c1 = eval(std::exp(x1));
      } else {
        lo = x1;
        x1 = x2;
        c1 = c2;
        x2 = lo + kInvPhi * (hi - lo);
        c2 = eval(std::exp(x2));
      }
    }
    // Refinement only replaces a strictly better incumbent, so rounding
    // noise next to a grid point cannot move the answer.
    for (const Candidate& c : {c1, c2}) {
      if (c.omega > best.omega) consider(c, false);
    }
  }

  bool verified_override = false;
  if (scenario.catalog) {
    std::vector<double> ratios;
    for (const double cost : *scenario.catalog) {
      RequirePositive(cost, "catalog cost");
      if (cost <= base) ratios.push_back(cost / base);
    }
    if (ratios.empty()) {
      throw InputError("no catalog entry is at or below cost_base");
    }
    std::sort(ratios.begin(), ratios.end());
    const double target = best.ratio;
    const auto upper = std::lower_bound(ratios.begin(), ratios.end(), target);
    std::optional<Candidate> snapped;
    if (upper != ratios.end()) snapped = eval(*upper);
    if (upper != ratios.begin()) {
      const Candidate below = eval(*(upper - 1));
      if (!snapped || Better(below, *snapped)) snapped = below;
    }
    Candidate chosen = *snapped;
    for (const double r : ratios) {
      const Candidate cand = eval(r);
      if (Better(cand, chosen) && cand.omega > chosen.omega) {
        chosen = cand;
        verified_override = true;
      }
    }
    best = chosen;
    best_stationary = false;
  }

  FleetPlan plan;
  plan.n_units = best.n;
  plan.unit_cost = best.ratio == 1.0 ? base : best.ratio * base;
  plan.sampling = sampling(best.ratio);
  plan.omega = NormalizedBenefit(params, static_cast<double>(plan.n_units),
                                 plan.unit_cost, scenario.c_attack,
                                 plan.sampling);
  if (best.ratio == 1.0 || plan.n_units == 0) {
    plan.method = PlanMethod::kBoundary;
  } else if (best_stationary && best.agrees && !verified_override) {
    plan.method = PlanMethod::kClosedForm;
  } else {
    plan.method = PlanMethod::kGridVerified;
  }
  return plan;
}

PrintedCaseStudy PrintedCaseStudyFormula(const GompertzParams& params,
                                         double cost_base, double c_attack) {
  ValidateGompertz(params);
  RequirePositive(cost_base, "cost_base");
  RequirePositive(c_attack, "c_attack");
  // Printed condition with E = 2, as a function of gamma alone:
  //   W0(b gamma) - ln gamma - 1 / W0(b gamma) = 0.
  const auto g = [&](double gamma) -> std::optional<double> {
    const auto arg = LambertArgument(params.b * gamma);
    if (!arg) return std::nullopt;
    const double w = LambertW(LambertBranch::kPrincipal, *arg);
    if (w == 0.0) return std::nullopt;
    return w - std::log(gamma) - 1.0 / w;
  };
  const double gamma_max = -1.0 / (std::numbers::e * params.b);
  const std::vector<double> grid = LogGrid(gamma_max * 1e-12, gamma_max, 4000);
  std::optional<double> root;
  std::optional<double> prev;
  for (size_t i = 0; i < grid.size() && !root; ++i) {
    const auto gi = g(grid[i]);
    if (gi && *gi == 0.0) {
      root = grid[i];
    } else if (gi && prev && (*gi < 0.0) != (*prev < 0.0)) {
      root = BisectLog(g, grid[i - 1], grid[i], *prev);
    }
    prev = gi;
  }
  if (!root) {
    throw InputError("printed cost condition has no principal-branch root");
  }

  PrintedCaseStudy out;
  const double abc = params.a * params.b * params.c;
  out.gamma_opt = *root;
  out.cost_coefficient = 1.0 / (abc * out.gamma_opt);
  out.lambert_coefficient = out.cost_coefficient / (params.a * params.c);
  out.w_coefficient = -1.0 / params.c;
  out.constant_term = std::log(out.cost_coefficient / abc) / params.c;
  out.log_coefficient = 2.0 / params.c;
  const double scale = cost_base / c_attack;
  out.optimal_cost = out.cost_coefficient * cost_base * scale;
  const auto arg = LambertArgument(out.lambert_coefficient * scale * scale);
  if (arg) {
    const double rest =
        out.constant_term + out.log_coefficient * std::log(scale);
    out.n1 = out.w_coefficient * LambertW(LambertBranch::kPrincipal, *arg) + rest;
    out.n2 = out.w_coefficient * LambertW(LambertBranch::kMinusOne, *arg) + rest;
  }
  return out;
}

}  // namespace fleetplan
