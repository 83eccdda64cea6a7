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

// Fleet economics: how many monitoring units to deploy and at which unit
// cost, given a Gompertz coverage curve M(n), the expected damage of an
// undetected attack C and a sampling-quality model f_S(cost / cost_base).
//
// The normalized benefit of n units of cost p is
//
//   omega(n, p) = C * f_S(p / cost_base) * M(n) - n * p.
//
// For fixed p its stationary points in n follow from Lambert W:
//
//   gamma = p / (a b c C s),   n_i = (ln gamma - W_i(b gamma)) / c,
//
// with real roots iff b gamma >= -1/e. Closed forms are always checked
// against an integer search over n, which has the final word.

#ifndef FLEETPLAN_FLEET_H_
#define FLEETPLAN_FLEET_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fleetplan/gompertz.h"
#include "fleetplan/lambert_w.h"

namespace fleetplan {

struct ThreatScenario {
  double c_attack = 0.0;   // expected damage of an undetected attack
  double cost_base = 0.0;  // cost of the best available unit
  // Available unit costs. Entries above cost_base are ignored.
  std::optional<std::vector<double>> catalog;
};

// Sampling quality as a function of the cost ratio x = p / cost_base.
class SamplingModel {
 public:
  // f_S(x) = x^exponent, exponent > 0.
  static SamplingModel Power(double exponent);
  // Piecewise-linear through (x, s) points with x ascending in (0, 1] and s
  // nondecreasing in (0, 1]. Below the first point the curve runs linearly
  // to the origin; above the last it stays flat.
  static SamplingModel Table(std::vector<std::pair<double, double>> points);

  double operator()(double ratio) const;
  // d f_S / dx. Central differences for tables.
  double Derivative(double ratio) const;
  // x f_S'(x) / f_S(x).
  double Elasticity(double ratio) const;

  bool is_power() const { return exponent_.has_value(); }
  double exponent() const { return exponent_.value_or(0.0); }
  const std::vector<std::pair<double, double>>& table() const { return table_; }
  std::string Describe() const;

 private:
  std::optional<double> exponent_;
  std::vector<std::pair<double, double>> table_;
};

// Parses "power:<p>" or "table:<path>" (CSV with header cost_ratio,sampling).
SamplingModel ParseSamplingModel(const std::string& text);

// cost_per_unit / c_attack <= -a c / e, with the boundary included to a
// relative tolerance of 1e-12.
// CSV with a `cost` column; rows in file order.
std::vector<double> LoadCostCatalogFile(const std::string& path);

bool IsFeasible(double cost_per_unit, double c_attack,
                const GompertzParams& params);

double NormalizedBenefit(const GompertzParams& params, double n,
                         double cost_per_unit, double c_attack,
                         double sampling);

struct UnitCountSolution {
  double gamma = 0.0;  // p / (a b c C s)
  bool feasible = false;
  std::optional<double> w1, w2;  // W_0(b gamma), W_-1(b gamma)
  std::optional<double> n1, n2;  // real roots
  std::optional<double> omega1, omega2;
  bool n1_nonnegative = false;
  bool n2_nonnegative = false;
  // Best of {0, floor/ceil of nonnegative roots}.
  std::int64_t closed_form_n = 0;
  // Integer argmax of omega over [0, n_cap]; lowest n on ties.
  std::int64_t recommended_n = 0;
  double recommended_omega = 0.0;
  bool closed_form_agrees = false;
  std::int64_t n_cap = 0;
};

// Throws InputError for nonpositive cost, c_attack or sampling, or invalid
// Gompertz parameters.
UnitCountSolution OptimalUnitCount(const GompertzParams& params,
                                   double cost_per_unit, double c_attack,
                                   double sampling);

// Smallest integer n past which no further unit can pay for itself:
// C s (a - M(n)) <= p.
std::int64_t UnitCountCap(const GompertzParams& params, double cost_per_unit,
                          double c_attack, double sampling);

// Which root condition produced a stationary cost.
//   kPrinted:  W - ln gamma + (1 - E) / W = 0
//   kEnvelope: W - ln gamma + E / W = 0
// E is the elasticity of f_S. The envelope form is the derivative of
// omega_i(p) = (p / c) (W + 1/W - ln gamma) with respect to p; the printed
// form is the one published with the closed-form theory and is what yields
// gamma ~= 1.77356 for a=1, b=-0.2, c=-0.05 with quadratic sampling.
enum class StationaryCondition { kPrinted, kEnvelope };
enum class Extremum { kMax, kMin, kSaddle };

std::string ToString(StationaryCondition condition);
std::string ToString(Extremum extremum);

struct StationaryCost {
  double cost = 0.0;
  double gamma = 0.0;
  LambertBranch branch = LambertBranch::kPrincipal;
  StationaryCondition condition = StationaryCondition::kPrinted;
  // Compares omega_i at cost * 0.99 and cost * 1.01 with omega_i at cost.
  Extremum classification = Extremum::kSaddle;
  double omega = 0.0;  // omega_i at the stationary cost
};

// Value of the root condition at cost p; nullopt when b gamma < -1/e.
std::optional<double> StationaryResidual(const GompertzParams& params,
                                         const ThreatScenario& scenario,
                                         const SamplingModel& sampling,
                                         LambertBranch branch,
                                         StationaryCondition condition,
                                         double cost);

// omega_i(p) = (p / c) (W_i + 1/W_i - ln gamma): the benefit at the real
// (possibly non-integer, possibly negative) root n_i for cost p.
std::optional<double> BranchBenefit(const GompertzParams& params,
                                    const ThreatScenario& scenario,
                                    const SamplingModel& sampling,
                                    LambertBranch branch, double cost);

// Roots in (0, cost_base] of both conditions on both branches, located by
// sign changes on a log-spaced grid and refined by bisection.
std::vector<StationaryCost> OptimalUnitCost(const GompertzParams& params,
                                            const ThreatScenario& scenario,
                                            const SamplingModel& sampling);

enum class PlanMethod { kClosedForm, kGridVerified, kBoundary };
std::string ToString(PlanMethod method);

struct FleetPlan {
  std::int64_t n_units = 0;
  double unit_cost = 0.0;
  double sampling = 0.0;
  double omega = 0.0;
  PlanMethod method = PlanMethod::kBoundary;
};

// Maximizes omega over (unit cost, integer n). Without a catalog the cost
// candidates are cost_base, every stationary cost and a dense log grid,
// with the best grid cells refined by golden-section search. With a
// catalog, the continuous optimum is snapped to the nearest cheaper and
// nearest dearer entries and the better one is kept, then checked against
// every entry. All work is done in units of cost_base, so scaling every
// currency input by the same factor scales omega and nothing else.
FleetPlan PlanFleet(const GompertzParams& params,
                    const ThreatScenario& scenario,
                    const SamplingModel& sampling);

// Reproduces the published closed-form case-study formula
//   n = -(1/c) W(k (base/C)^2) + (1/c) ln(kappa / (abc)) + (2/c) ln(base/C)
// for quadratic sampling and the printed stationary gamma. It evaluates the
// unit-count formula with the sampling-free cost ratio, so it is a
// diagnostic for comparison and never a plan.
struct PrintedCaseStudy {
  double gamma_opt = 0.0;
  double cost_coefficient = 0.0;     // p_opt = coef * base^2 / C
  double lambert_coefficient = 0.0;  // argument of W per (base/C)^2
  double w_coefficient = 0.0;        // -1/c
  double constant_term = 0.0;        // (1/c) ln(coef / (abc))
  double log_coefficient = 0.0;      // 2/c
  double optimal_cost = 0.0;
  std::optional<double> n1, n2;
};

// Throws InputError when the printed condition has no principal-branch
// root for these parameters.
PrintedCaseStudy PrintedCaseStudyFormula(const GompertzParams& params,
                                         double cost_base, double c_attack);

}  // namespace fleetplan

#endif  // FLEETPLAN_FLEET_H_
