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

// Real branches of the Lambert W function, the inverse of w -> w e^w.

#ifndef FLEETPLAN_LAMBERT_W_H_
#define FLEETPLAN_LAMBERT_W_H_

#include <string>

namespace fleetplan {

enum class LambertBranch { kPrincipal, kMinusOne };

std::string ToString(LambertBranch branch);

// -1/e as a double.
double LambertBranchPoint();

// Principal branch: x >= -1/e, returns w >= -1.
// Minus-one branch: -1/e <= x < 0, returns w <= -1.
// Throws InputError outside the branch domain. The result satisfies
// w e^w = x to within 1e-12 relative.
double LambertW(LambertBranch branch, double x);

// Power series sum_{n>=1} (-1)^{n-1} n^{n-2} / (n-1)! x^n of the principal
// branch, truncated after `terms` terms. Converges for |x| < 1/e.
double LambertWSeries(double x, int terms);

}  // namespace fleetplan

#endif  // FLEETPLAN_LAMBERT_W_H_
