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

#ifndef ANNEALOPT_ONED_SAMPLER_HPP_
#define ANNEALOPT_ONED_SAMPLER_HPP_

#include <cstdint>
#include <functional>

#include "annealopt/rng.hpp"
#include "annealopt/types.hpp"

namespace annealopt {

// Restriction of a beta-log-concave function g to a bounded segment,
// accessed through log g (which may be -inf).  All sampler arithmetic stays
// in log space; g itself underflows at low temperatures.
struct ChordFunction {
  std::function<double(double)> log_value;
  double beta = 0.0;  // log-concavity defect of g (>= 0)
  double lo = 0.0;
  double hi = 0.0;
};

struct SamplerParams {
  double eps_tilde = 1e-3;       // must lie in (0, e^{-2 beta}/2)
  double beta_floor = 1e-6;      // effective beta = max(beta, beta_floor)
  std::int64_t max_rejections = 1000000;
  int max_bisection_iters = 200;
};

// Throws InvalidInputError unless eps_tilde is within the admissible range
// for this beta and the iteration budgets are positive.
void validate(const SamplerParams& params, double beta);

enum class TailSide { left, right };

struct NearMaxResult {
  double offset = 0.0;
  double log_value = 0.0;
  std::int64_t evals = 0;
  int iterations = 0;
};

struct TailPoint {
  double offset = 0.0;
  double log_value = 0.0;
  bool at_endpoint = false;
  // Set when the search collapsed onto a discontinuity wider than the
  // acceptance window (possible only when the declared beta understates
  // the target's defect); the offset is then the certified inside point.
  bool at_jump = false;
  std::int64_t evals = 0;
};

struct ChordInit {
  double p = 0.0;
  double log_gp = 0.0;
  TailPoint lo_tail;
  TailPoint hi_tail;
  std::int64_t evals = 0;
};

struct ChordSample {
  double offset = 0.0;
  double log_value = 0.0;  // log g at the accepted offset
  ChordInit init;
  std::int64_t attempts = 0;
  std::int64_t evals = 0;  // total log g evaluations consumed
};

// Three-point interval shrinking: returns p with
// log g(p) >= max log g - 3 * max(beta, beta_floor).
NearMaxResult find_near_max(const ChordFunction& g,
                            const SamplerParams& params);

// Midpoint binary search for a tail point e between p and the endpoint with
// (1/2) e^{-beta} eps g(p) <= g(e) <= eps g(p), or the endpoint itself when
// it already carries that much mass.
TailPoint find_tail_point(const ChordFunction& g, TailSide side, double p,
                          const SamplerParams& params);

// Both initialization steps of the rejection sampler.
ChordInit init_chord_sampler(const ChordFunction& g,
                             const SamplerParams& params);

// Rejection sampler on [e_{-1}, e_1] with envelope g(p) e^{3 beta_eff}.
// The law of the output is within 3 e^{2 beta} eps_tilde total variation of
// the normalized restriction of g.
ChordSample sample_chord(const ChordFunction& g, const SamplerParams& params,
                         Rng& rng);

}  // namespace annealopt

#endif  // ANNEALOPT_ONED_SAMPLER_HPP_
