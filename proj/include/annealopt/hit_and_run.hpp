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

#ifndef ANNEALOPT_HIT_AND_RUN_HPP_
#define ANNEALOPT_HIT_AND_RUN_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "annealopt/geometry.hpp"
#include "annealopt/oned_sampler.hpp"
#include "annealopt/rng.hpp"
#include "annealopt/types.hpp"

namespace annealopt {

// Unnormalized log-density over K together with its log-concavity defect.
// The defect is supplied by the caller (for tempered objectives the
// annealer passes 2 rho / T); it is never estimated here.
struct LogTarget {
  std::function<double(const Vector&)> log_density;
  double beta = 0.0;
};

struct WalkParams {
  std::int64_t steps = 1;
  // Direction transform; empty means isotropic directions.
  std::optional<RoundingMap> rounding;
  SamplerParams sampler;
  bool record_trace = false;
  // Assert membership of every iterate (debug aid).
  bool check_membership = false;
};

struct WalkStats {
  std::int64_t oracle_queries = 0;  // log-density evaluations consumed
  std::int64_t attempts = 0;        // rejection-sampler proposals
  std::int64_t steps = 0;
  double min_step_acceptance = 1.0;

  double acceptance_rate() const {
    return attempts > 0 ? static_cast<double>(steps) / attempts : 1.0;
  }
  void merge(const WalkStats& o);
};

struct WalkResult {
  Vector final_point;
  double final_log_density = 0.0;
  std::vector<Vector> trace;
  std::vector<double> trace_log_density;        // filled with trace
  std::vector<std::int64_t> trace_queries;      // cumulative, per step
  WalkStats stats;
};

// One Hit-and-Run step: sample a direction, extract the chord through x,
// and resample from the target restricted to it.
Vector step(const LogTarget& g, const ConvexBody& body, const Vector& x,
            const WalkParams& params, Rng& rng, WalkStats* stats = nullptr,
            double* log_density_out = nullptr);

// m composed steps from x0.
WalkResult walk(const LogTarget& g, const ConvexBody& body, const Vector& x0,
                const WalkParams& params, Rng& rng);

// Step count sufficient for total-variation distance gamma from a warm
// start of L2 norm M:
//   ceil(C n^2 e^{6 beta} (R/r)^2 log^4(e^beta M n R / (r gamma^2))
//        * log(M / gamma)).
// Saturates at INT64_MAX; mixing_steps_value returns the unrounded value.
std::int64_t mixing_steps(int n, double R, double r, double beta, double M,
                          double gamma, double C);
double mixing_steps_value(int n, double R, double r, double beta, double M,
                          double gamma, double C);

// Per-step 1-D sampler precision gamma e^{-2 beta} / (12 m), which keeps
// the accumulated truncation error of m steps at gamma/4.
double sampler_precision(double gamma, double beta, std::int64_t m);

}  // namespace annealopt

#endif  // ANNEALOPT_HIT_AND_RUN_HPP_
