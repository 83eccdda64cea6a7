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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fleetplan/error.h"
#include "oracles.h"

namespace fleetplan {
namespace {

double Residual(double w, double x) {
  return std::abs(w * std::exp(w) - x) / std::max(std::abs(x), 1e-300);
}

TEST(LambertW, ZeroOnPrincipalBranch) {
  EXPECT_EQ(LambertW(LambertBranch::kPrincipal, 0.0), 0.0);
}

TEST(LambertW, BranchPointIsMinusOneOnBothBranches) {
  const double x = LambertBranchPoint();
  EXPECT_EQ(LambertW(LambertBranch::kPrincipal, x), -1.0);
  EXPECT_EQ(LambertW(LambertBranch::kMinusOne, x), -1.0);
}

TEST(LambertW, MinusOneBranchMatchesBisectionOracle) {
  const double oracle = testing::Bisect(
      [](double w) { return w * std::exp(w) + 0.05; }, -20.0, -1.0);
  const double w = LambertW(LambertBranch::kMinusOne, -0.05);
  EXPECT_NEAR(w, oracle, 1e-12 * std::abs(oracle));
  EXPECT_NEAR(w, -4.49976, 1e-5);
}

TEST(LambertW, PrincipalBranchMatchesBisectionOracle) {
  for (const double x : {-0.35, -0.2, -0.01, 0.01, 0.5, 2.0, 10.0, 1e6}) {
    const double oracle = testing::Bisect(
        [x](double w) { return w * std::exp(w) - x; }, -1.0, 20.0);
    EXPECT_NEAR(LambertW(LambertBranch::kPrincipal, x), oracle,
                1e-12 * std::max(1.0, std::abs(oracle)))
        << "x=" << x;
  }
}

TEST(LambertW, KnownValues) {
  // Omega constant and W(e) = 1.
  EXPECT_NEAR(LambertW(LambertBranch::kPrincipal, 1.0), 0.5671432904097838,
              1e-15);
  EXPECT_NEAR(LambertW(LambertBranch::kPrincipal, std::exp(1.0)), 1.0, 1e-15);
  // -2 e^-2 on the lower branch.
  EXPECT_NEAR(LambertW(LambertBranch::kMinusOne, -2.0 * std::exp(-2.0)), -2.0,
              1e-12);
}

TEST(LambertW, IdentityAndRangeOnRandomPoints) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double bp = LambertBranchPoint();
  for (int i = 0; i < 3000; ++i) {
    const double x0 = bp + (0.0 - bp) * u(rng);
    const double x1 = std::pow(10.0, -12.0 + 312.0 * u(rng));
    const double w0 = LambertW(LambertBranch::kPrincipal, x0);
    const double w1 = LambertW(LambertBranch::kPrincipal, x1);
    EXPECT_LE(Residual(w0, x0), 1e-12) << x0;
    EXPECT_LE(Residual(w1, x1), 1e-12) << x1;
    EXPECT_GE(w0, -1.0);
    if (x0 < 0.0) {
      const double wm = LambertW(LambertBranch::kMinusOne, x0);
      EXPECT_LE(Residual(wm, x0), 1e-12) << x0;
      EXPECT_LE(wm, -1.0);
    }
  }
}

TEST(LambertW, NearBranchPointAndNearZero) {
  const double bp = LambertBranchPoint();
  for (const double d : {1e-16, 1e-12, 1e-8, 1e-4}) {
    const double x = bp + d;
    EXPECT_LE(Residual(LambertW(LambertBranch::kPrincipal, x), x), 1e-12);
    EXPECT_LE(Residual(LambertW(LambertBranch::kMinusOne, x), x), 1e-12);
  }
  for (const double x : {-1e-300, -1e-100, -1e-12, -1e-4}) {
    const double w = LambertW(LambertBranch::kMinusOne, x);
    EXPECT_LE(Residual(w, x), 1e-12) << x;
  }
}

TEST(LambertW, OutOfDomainThrows) {
  EXPECT_THROW(LambertW(LambertBranch::kPrincipal, -0.4), InputError);
  EXPECT_THROW(LambertW(LambertBranch::kMinusOne, 0.0), InputError);
  EXPECT_THROW(LambertW(LambertBranch::kMinusOne, 0.3), InputError);
  EXPECT_THROW(LambertW(LambertBranch::kPrincipal, std::nan("")), InputError);
}

TEST(LambertW, SeriesConvergesNearZero) {
  for (const double x : {-0.05, -0.01, 0.02, 0.05}) {
    EXPECT_NEAR(LambertWSeries(x, 30), LambertW(LambertBranch::kPrincipal, x),
                1e-14);
  }
  EXPECT_EQ(LambertWSeries(0.0, 10), 0.0);
  // First terms: x - x^2 + 3/2 x^3.
  EXPECT_NEAR(LambertWSeries(0.1, 3), 0.1 - 0.01 + 0.0015, 1e-15);
}

}  // namespace
}  // namespace fleetplan
