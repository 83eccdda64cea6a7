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

#include "fleetplan/gompertz.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "fleetplan/error.h"

namespace fleetplan {
namespace {

constexpr int kMaxIterations = 500;
constexpr double kRelativeImprovement = 1e-12;
// Keeps b and c strictly negative and a strictly positive while clamping.
constexpr double kTiny = 1e-12;

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

GompertzParams Clamp(GompertzParams p) {
  p.a = std::clamp(p.a, kTiny, 1.0);
  p.b = std::min(p.b, -kTiny);
  p.c = std::min(p.c, -kTiny);
  return p;
}

double Model(const GompertzParams& p, double n) {
  return p.a * std::exp(p.b * std::exp(p.c * n));
}

double SumSquares(const GompertzParams& p,
                  const std::vector<std::pair<double, double>>& pts) {
  double s = 0.0;
  for (const auto& [n, y] : pts) {
    const double r = y - Model(p, n);
    s += r * r;
  }
  return s;
}

// Solves A x = rhs by Gaussian elimination with partial pivoting. Returns
// false when A is singular.
bool Solve3(Mat3 a, Vec3 rhs, Vec3& x) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (!(std::abs(a[pivot][col]) > 0.0)) return false;
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int k = col; k < 3; ++k) a[r][k] -= f * a[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int r = 2; r >= 0; --r) {
    double s = rhs[r];
    for (int k = r + 1; k < 3; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  return std::isfinite(x[0]) && std::isfinite(x[1]) && std::isfinite(x[2]);
}

GompertzParams InitialGuess(const std::vector<std::pair<double, double>>& pts) {
  double y_max = 0.0;
  for (const auto& pt : pts) y_max = std::max(y_max, pt.second);
  GompertzParams p;
  p.a = std::min(1.0, 1.05 * y_max);
  const auto ratio = [&](double y) {
    return std::clamp(y / p.a, 1e-12, 1.0 - 1e-12);
  };
  p.b = std::log(ratio(pts.front().second));
  // log(-log(y/a)) = log(-b) + c n; slope between the end points.
  const double z0 = std::log(-std::log(ratio(pts.front().second)));
  const double z1 = std::log(-std::log(ratio(pts.back().second)));
  const double span = pts.back().first - pts.front().first;
  p.c = (z1 - z0) / span;
  if (!std::isfinite(p.c) || p.c >= 0.0) p.c = -1.0 / span;
  return Clamp(p);
}

}  // namespace

void ValidateGompertz(const GompertzParams& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c) ||
      !(p.a > 0.0 && p.a <= 1.0) || !(p.b < 0.0) || !(p.c < 0.0)) {
    throw InputError("Gompertz parameters need a in (0,1], b < 0, c < 0");
  }
}

double GompertzValue(const GompertzParams& params, double n) {
  if (!(n >= 0.0)) throw InputError("unit count must be >= 0");
  return Model(params, n);
}

double GompertzDerivative(const GompertzParams& params, double n) {
  if (!(n >= 0.0)) throw InputError("unit count must be >= 0");
  const double u = std::exp(params.c * n);
  return params.a * params.b * params.c * u * std::exp(params.b * u);
}

FitResult FitGompertz(std::span<const std::pair<double, double>> input) {
  if (input.size() < 4) throw InputError("need at least 4 points to fit");
  std::vector<std::pair<double, double>> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  for (size_t i = 0; i < pts.size(); ++i) {
    const auto [n, y] = pts[i];
    if (!std::isfinite(n) || n < 0.0) throw InputError("n must be >= 0");
    if (!(y >= 0.0 && y <= 1.0)) throw InputError("coverage must be in [0,1]");
    if (i > 0 && pts[i - 1].first == n) throw InputError("duplicate n value");
  }
  const bool all_equal =
      std::all_of(pts.begin(), pts.end(),
                  [&](const auto& pt) { return pt.second == pts[0].second; });
  if (all_equal) throw InputError("degenerate curve: all coverages are equal");

  GompertzParams p = InitialGuess(pts);
  double ss = SumSquares(p, pts);
  double lambda = 1e-3;
  int iterations = 0;
  for (; iterations < kMaxIterations && ss > 0.0; ++iterations) {
    Mat3 jtj{};
    Vec3 jtr{};
    for (const auto& [n, y] : pts) {
      const double u = std::exp(p.c * n);
      const double e = std::exp(p.b * u);
      const double m = p.a * e;
      const Vec3 grad = {e, m * u, m * p.b * n * u};
      const double r = y - m;
      for (int i = 0; i < 3; ++i) {
        jtr[i] += grad[i] * r;
        for (int j = 0; j < 3; ++j) jtj[i][j] += grad[i] * grad[j];
      }
    }
    bool accepted = false;
    double improvement = 0.0;
    while (lambda < 1e30) {
      Mat3 damped = jtj;
      for (int i = 0; i < 3; ++i) {
        damped[i][i] += lambda * std::max(jtj[i][i], 1e-300);
      }
      Vec3 step{};
      if (Solve3(damped, jtr, step)) {
        const GompertzParams trial =
            Clamp({p.a + step[0], p.b + step[1], p.c + step[2]});
        const double trial_ss = SumSquares(trial, pts);
        if (trial_ss < ss) {
          improvement = (std::sqrt(ss) - std::sqrt(trial_ss)) / std::sqrt(ss);
          p = trial;
          ss = trial_ss;
          lambda = std::max(lambda / 3.0, 1e-15);
          accepted = true;
          break;
        }
      }
      lambda *= 4.0;
    }
    if (!accepted || improvement < kRelativeImprovement) {
      ++iterations;
      break;
    }
  }

  FitResult fit;
  fit.params = p;
  fit.iterations = iterations;
  fit.residual_norm = std::sqrt(ss);
  double mean = 0.0;
  for (const auto& pt : pts) mean += pt.second;
  mean /= static_cast<double>(pts.size());
  double total = 0.0;
  for (const auto& pt : pts) total += (pt.second - mean) * (pt.second - mean);
  fit.r_squared = std::clamp(1.0 - ss / total, 0.0, 1.0);
  return fit;
}

}  // namespace fleetplan
