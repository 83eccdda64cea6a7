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

// Gompertz coverage curve M(n) = a * exp(b * exp(c * n)), with
// a in (0, 1], b < 0, c < 0: monotone increasing from a*e^b towards a.

#ifndef FLEETPLAN_GOMPERTZ_H_
#define FLEETPLAN_GOMPERTZ_H_

#include <span>
#include <utility>

namespace fleetplan {

struct GompertzParams {
  double a = 1.0;
  double b = -1.0;
  double c = -0.1;
};

// Throws InputError unless a in (0, 1], b < 0 and c < 0 (all finite).
void ValidateGompertz(const GompertzParams& params);

// Throws InputError for n < 0.
double GompertzValue(const GompertzParams& params, double n);
// dM/dn = a b c e^{cn} e^{b e^{cn}}.
double GompertzDerivative(const GompertzParams& params, double n);

struct FitResult {
  GompertzParams params;
  double r_squared = 0.0;
  double residual_norm = 0.0;  // Euclidean norm of coverage residuals
  int iterations = 0;
};

// Least-squares fit in coverage space by Levenberg-Marquardt with the
// parameters clamped to the valid region. Every accepted step reduces the
// residual norm; iteration stops when the relative improvement of an
// accepted step drops below 1e-12, or after 500 iterations. Points are
// processed in ascending n, so the result does not depend on input order.
// Throws InputError for fewer than 4 points, duplicate n, coverage outside
// [0, 1], negative n, or all-equal coverages.
FitResult FitGompertz(std::span<const std::pair<double, double>> points);

}  // namespace fleetplan

#endif  // FLEETPLAN_GOMPERTZ_H_
