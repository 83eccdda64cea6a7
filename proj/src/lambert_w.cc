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

#include "fleetplan/lambert_w.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "fleetplan/error.h"

namespace fleetplan {
namespace {

constexpr int kMaxIterations = 64;

// Expansion about the branch point in p = +-sqrt(2 (e x + 1)); p > 0 gives
// the principal branch, p < 0 the minus-one branch.
double BranchPointGuess(double x, double sign) {
  const double q = std::max(0.0, 2.0 * (std::numbers::e * x + 1.0));
  const double p = sign * std::sqrt(q);
  return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
}

// Halley iteration on f(w) = w e^w - x. Keeps the iterate with the smallest
// residual, which matters only next to the branch point where f'(w) -> 0.
double Halley(double x, double w) {
  double best = w;
  double best_residual = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kMaxIterations; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) < best_residual) {
      best_residual = std::abs(f);
      best = w;
    }
    if (f == 0.0) break;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0 || !std::isfinite(denom)) break;
    const double dw = f / denom;
    w -= dw;
    if (std::abs(dw) <= 4 * std::numeric_limits<double>::epsilon() *
                             (1.0 + std::abs(w))) {
      const double final_residual = std::abs(w * std::exp(w) - x);
      if (final_residual < best_residual) best = w;
      break;
    }
  }
  return best;
}

// Newton iteration on g(w) = w + log|w| - log|x|, well conditioned when
// |w| is large (x large on the principal branch, x -> 0- on the other).
double LogNewton(double x, double w) {
  const double target = std::log(std::abs(x));
  for (int i = 0; i < kMaxIterations; ++i) {
    const double g = w + std::log(std::abs(w)) - target;
    const double dw = g / (1.0 + 1.0 / w);
    w -= dw;
    if (std::abs(dw) <= 2 * std::numeric_limits<double>::epsilon() *
                             std::abs(w)) {
      break;
    }
  }
  return w;
}

}  // namespace

std::string ToString(LambertBranch branch) {
  return branch == LambertBranch::kPrincipal ? "principal" : "minus_one";
}

double LambertBranchPoint() { return -std::exp(-1.0); }

double LambertWSeries(double x, int terms) {
  double sum = 0.0;
  for (int n = 1; n <= terms; ++n) {
    if (x == 0.0) break;
    const double magnitude = std::exp((n - 2) * std::log(static_cast<double>(n)) -
                                      std::lgamma(static_cast<double>(n)) +
                                      n * std::log(std::abs(x)));
    const bool negative = ((n - 1) % 2 == 1) != (x < 0.0 && n % 2 == 1);
    sum += negative ? -magnitude : magnitude;
  }
  return sum;
}

double LambertW(LambertBranch branch, double x) {
  const double branch_point = LambertBranchPoint();
  if (!std::isfinite(x) || x < branch_point) {
    throw InputError("Lambert W argument outside the real domain");
  }
  if (x == branch_point) return -1.0;

  if (branch == LambertBranch::kPrincipal) {
    if (x == 0.0) return 0.0;
    if (std::abs(x) < 0.05) return Halley(x, LambertWSeries(x, 10));
    if (x < -0.25) return Halley(x, BranchPointGuess(x, 1.0));
    if (x > std::numbers::e) {
      const double l1 = std::log(x);
      const double l2 = std::log(l1);
      return LogNewton(x, l1 - l2 + l2 / l1);
    }
    const double l = std::log1p(x);
    return Halley(x, l * (1.0 - std::log1p(l) / (2.0 + l)));
  }

  if (x >= 0.0) {
    throw InputError("minus-one branch needs -1/e <= x < 0");
  }
  if (x < -0.25) return Halley(x, BranchPointGuess(x, -1.0));
  const double l1 = std::log(-x);
  const double l2 = std::log(-l1);
  const double guess = l1 - l2 + l2 / l1;
  return x > -1e-3 ? LogNewton(x, guess) : Halley(x, guess);
}

}  // namespace fleetplan
