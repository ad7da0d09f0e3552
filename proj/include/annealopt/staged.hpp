//
// Copyright 2026 The annealopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef ANNEALOPT_STAGED_HPP_
#define ANNEALOPT_STAGED_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "annealopt/annealing.hpp"
#include "annealopt/geometry.hpp"
#include "annealopt/types.hpp"

namespace annealopt {

// Non-convexity decay profile Delta(r) = sup over the radius-r ball of
// |F - f|, together with the strong-convexity modulus of f and the
// per-stage guarantee constant C.
struct DecayModel {
  enum class Kind { polynomial, logarithmic, custom };

  Kind kind = Kind::polynomial;
  double c = 0.0;  // scale for polynomial/logarithmic
  double p = 1.0;  // polynomial exponent, 0 < p < 2
  double d = 1.0;  // logarithmic rate
  std::function<double(double)> custom;
  double alpha = 1.0;  // strong convexity of f
  double C = 4.0;      // constant in f(x_t) - f* <= C n Delta(3 r_t)

  double delta(double r) const;

  static DecayModel polynomial(double c, double p, double alpha,
                               double C = 4.0);
  static DecayModel logarithmic(double c, double d, double alpha,
                                double C = 4.0);
  static DecayModel custom_model(std::function<double(double)> delta,
                                 double alpha, double C = 4.0);
};

// Radius recursion: r_{t+1} = sqrt(2 C n Delta(3 r_t) / alpha).
double next_radius(const DecayModel& model, int n, double r_t);

// Fixed point of the recursion, (alpha / 2 C n) r^2 = Delta(3 r):
// closed form for the polynomial kind, bracketing bisection otherwise
// (relative tolerance 1e-10).
double critical_radius(const DecayModel& model, int n);

struct StageRecord {
  int stage = 0;
  Vector center;
  double radius = 0.0;      // r_t (search ball has radius 2 r_t)
  double rho = 0.0;         // Delta(3 r_t)
  double inner_best = 0.0;  // best F value found by the inner run
  std::int64_t queries = 0;
};

struct StagedOptions {
  double eps_rel = 0.5;  // stop once radii stagnate within (1 + eps_rel)
  int max_stages = 64;
  PlanOverrides inner;
  // Inner target accuracy is max(n * rho_t, floor_frac * range of the
  // stage's quadratic model).
  double inner_epsilon_floor_frac = 0.05;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct StagedResult {
  Vector x_final;
  double best_value = 0.0;
  std::vector<StageRecord> stage_log;
  std::int64_t total_queries = 0;
  bool failed = false;
  std::string note;
};

// Stage loop: anneal over B(x_{t-1}, 2 r_t) with per-stage non-convexity
// bound rho_t = Delta(3 r_t), re-center at the stage's best point, shrink
// the radius by the recursion, and stop at stagnation or at the critical
// radius.
StagedResult staged_optimize(const std::function<double(const Vector&)>& F,
                             const ConvexBody& enclosing,
                             const DecayModel& model, const Vector& x0,
                             double r0, const StagedOptions& options);

}  // namespace annealopt

#endif  // ANNEALOPT_STAGED_HPP_
