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

#ifndef ANNEALOPT_ANNEALING_HPP_
#define ANNEALOPT_ANNEALING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "annealopt/geometry.hpp"
#include "annealopt/hit_and_run.hpp"
#include "annealopt/objective.hpp"
#include "annealopt/types.hpp"

namespace annealopt {

struct AnnealConstants {
  double C_mix = 1.0;      // constant in the mixing-step formula
  double c_strand = 4.0;   // N = ceil(c_strand * n * log n)
  double gamma = 0.1;      // per-epoch TV target feeding the error budget
  // Cap on the walk's log-concavity defect in practice mode.  The ceiling
  // in the epoch-count formula drives T_K well below rho at small n, where
  // the uncapped 2 rho / T_i makes the rejection envelope e^{3 beta}
  // astronomically loose.  2 is the value at the nominal final temperature
  // T_K = rho.  Theory mode leaves beta uncapped.
  double beta_cap = 2.0;
  std::int64_t m0 = 100;           // uniform burn-in is 10 * n * m0 steps
  double init_eps_tilde = 1e-3;    // sampler precision for the burn-in
  double rho_warn_cap = 1.5;       // warn when rho * n / epsilon exceeds this
};

struct PlanOverrides {
  std::optional<std::int64_t> m;      // per-epoch walk length
  std::optional<int> strands;
  std::optional<double> gamma;
  std::optional<double> c_strand;
  std::optional<double> C_mix;
  std::optional<double> beta_cap;
  std::optional<std::int64_t> m0;
  bool theory_mode = false;  // m from the mixing-step formula, beta uncapped
};

// Temperature schedule, strand count and per-epoch walk/sampler settings.
// Invariants: T_0 = 1 and T_{i+1} = T_i (1 - 1/sqrt(n)) exactly;
// T_K <= epsilon/n; K = ceil(sqrt(n) log(n/epsilon));
// N = ceil(c_strand n log n).
struct AnnealingPlan {
  int n = 0;
  double epsilon = 0.0;
  double rho = 0.0;
  std::vector<double> temperatures;     // T_0 .. T_K
  int epochs = 0;                       // K
  int strands = 0;                      // N
  std::vector<std::int64_t> steps;      // m_i, index 1..K
  std::vector<double> eps_tilde;        // per-epoch sampler precision
  std::vector<double> beta;             // walk beta per epoch (capped)
  std::vector<double> beta_uncapped;    // 2 rho / T_i
  std::vector<double> warm_start_M;     // 5 exp(2 beta_uncapped_i)
  std::int64_t init_steps = 0;          // uniform burn-in per strand
  AnnealConstants constants;
  bool theory_mode = false;
  std::vector<std::string> warnings;
};

AnnealingPlan make_plan(int n, double epsilon, const ConvexBody& body,
                        double rho, const PlanOverrides& overrides = {});

// Empirical whitening update: measures mean and covariance of the points as
// seen through `previous` and composes the symmetric inverse square root on
// top, so the updated map sends the centered points to identity covariance.
RoundingMap update_rounding(const std::vector<Vector>& points,
                            const RoundingMap& previous);

// (n+1) T exp(2 rho / T): expected optimality gap of a sample at
// temperature T when |F - f| <= rho.
double gibbs_gap_bound(int n, double T, double rho);

struct EpochRecord {
  int epoch = 0;
  double temperature = 0.0;
  double best_value = 0.0;
  std::int64_t queries = 0;
  double accept_min = 1.0;
  double accept_median = 1.0;
  double cov_eig_min = 1.0;  // eigen range of the pre-update mapped covariance
  double cov_eig_max = 1.0;
};

struct AnnealResult {
  Vector best_point;
  double best_value = 0.0;
  std::vector<EpochRecord> epoch_log;
  std::int64_t total_queries = 0;  // billed oracle calls, exact
  std::int64_t total_evals = 0;    // F evaluations, exact
  std::vector<Vector> final_points;
  bool failed = false;
  std::string failure;
  std::vector<std::string> warnings;
};

// Simulated annealing: N uniform burn-in strands, then per epoch a rounding
// update followed by warm-started Hit-and-Run walks against
// exp(-F / T_i).  Strand j of epoch i draws from the stream
// (master_seed, i, j), so results are identical for any thread count.
AnnealResult anneal(const ObjectiveOracle& F, const ConvexBody& body,
                    const AnnealingPlan& plan, std::uint64_t master_seed,
                    int threads = 1);

}  // namespace annealopt

#endif  // ANNEALOPT_ANNEALING_HPP_
