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

#include "annealopt/annealing.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace annealopt {

namespace {

// Mean/covariance (1/N normalization) of points seen through a map.
void mapped_moments(const std::vector<Vector>& points, const RoundingMap& map,
                    Vector* mean, Matrix* cov) {
  const int n = map.dim();
  const double N = static_cast<double>(points.size());
  Vector mu = Vector::Zero(n);
  std::vector<Vector> mapped;
  mapped.reserve(points.size());
  for (const Vector& x : points) {
    mapped.push_back(map.apply(x));
    mu += mapped.back();
  }
  mu /= N;
  Matrix c = Matrix::Zero(n, n);
  for (const Vector& y : mapped) {
    const Vector d = y - mu;
    c += d * d.transpose();
  }
  c /= N;
  *mean = mu;
  *cov = c;
}

double median_of(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const size_t k = values.size() / 2;
  if (values.size() % 2 == 1) return values[k];
  return 0.5 * (values[k - 1] + values[k]);
}

// Run fn(j) for j in [0, count) over `threads` workers with a fixed
// round-robin assignment.  Rethrows the first failure by strand index.
template <typename Fn>
void parallel_strands(int count, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, count));
  std::vector<std::exception_ptr> errors(count);
  if (threads == 1) {
    for (int j = 0; j < count; ++j) {
      try {
        fn(j);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t]() {
        for (int j = t; j < count; j += threads) {
          try {
            fn(j);
          } catch (...) {
            errors[j] = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  for (int j = 0; j < count; ++j) {
    if (errors[j]) std::rethrow_exception(errors[j]);
  }
}

}  // namespace

AnnealingPlan make_plan(int n, double epsilon, const ConvexBody& body,
                        double rho, const PlanOverrides& overrides) {
  if (n < 2)
    throw InvalidInputError(
        "annealing schedule requires dimension >= 2 (the temperature ratio "
        "1 - 1/sqrt(n) degenerates at n = 1)");
  if (!(epsilon > 0.0)) throw InvalidInputError("epsilon must be > 0");
  if (rho < 0.0) throw InvalidInputError("rho must be >= 0");
  if (body.dim() != n) throw InvalidInputError("body dimension mismatch");

  AnnealingPlan plan;
  plan.n = n;
  plan.epsilon = epsilon;
  plan.rho = rho;
  plan.theory_mode = overrides.theory_mode;
  if (overrides.gamma) plan.constants.gamma = *overrides.gamma;
  if (overrides.c_strand) plan.constants.c_strand = *overrides.c_strand;
  if (overrides.C_mix) plan.constants.C_mix = *overrides.C_mix;
  if (overrides.beta_cap) plan.constants.beta_cap = *overrides.beta_cap;
  if (overrides.m0) plan.constants.m0 = *overrides.m0;

  const double nd = static_cast<double>(n);
  plan.epochs = static_cast<int>(std::ceil(std::sqrt(nd) * std::log(nd / epsilon)));
  if (plan.epochs < 0) plan.epochs = 0;

  const double ratio = 1.0 - 1.0 / std::sqrt(nd);
  plan.temperatures.resize(plan.epochs + 1);
  plan.temperatures[0] = 1.0;
  for (int i = 1; i <= plan.epochs; ++i)
    plan.temperatures[i] = plan.temperatures[i - 1] * ratio;
  if (plan.epochs > 0 && plan.temperatures[plan.epochs] > epsilon / nd)
    throw InvalidInputError("schedule failed to reach the final temperature");

  plan.strands = overrides.strands
                     ? *overrides.strands
                     : static_cast<int>(std::ceil(plan.constants.c_strand *
                                                  nd * std::log(nd)));
  plan.strands = std::max(plan.strands, n + 1);

  if (rho * nd / epsilon > plan.constants.rho_warn_cap) {
    std::ostringstream os;
    os << "rho * n / epsilon = " << rho * nd / epsilon
       << " exceeds the standard regime; the optimality guarantee degrades "
          "by exp(2 rho / T_K)";
    plan.warnings.push_back(os.str());
  }

  plan.init_steps = 10 * n * plan.constants.m0;
  plan.steps.assign(plan.epochs + 1, 0);
  plan.eps_tilde.assign(plan.epochs + 1, 0.0);
  plan.beta.assign(plan.epochs + 1, 0.0);
  plan.beta_uncapped.assign(plan.epochs + 1, 0.0);
  plan.warm_start_M.assign(plan.epochs + 1, 0.0);

  const std::int64_t practice_m =
      overrides.m ? *overrides.m
                  : std::max<std::int64_t>(50, 10 * static_cast<std::int64_t>(n) * n);
  for (int i = 1; i <= plan.epochs; ++i) {
    const double T = plan.temperatures[i];
    const double beta_raw = T > 0.0 ? 2.0 * rho / T : 0.0;
    plan.beta_uncapped[i] = beta_raw;
    plan.warm_start_M[i] = 5.0 * std::exp(2.0 * beta_raw);
    plan.beta[i] = plan.theory_mode
                       ? beta_raw
                       : std::min(beta_raw, plan.constants.beta_cap);
    if (plan.theory_mode && !overrides.m) {
      plan.steps[i] = mixing_steps(n, body.outer_radius(), body.inner_radius(),
                                   beta_raw, plan.warm_start_M[i],
                                   plan.constants.gamma, plan.constants.C_mix);
    } else {
      plan.steps[i] = practice_m;
    }
    plan.eps_tilde[i] =
        sampler_precision(plan.constants.gamma, plan.beta[i], plan.steps[i]);
    // Error-budget identity: m * 3 e^{2 beta} eps_tilde == gamma / 4.
    const double budget = static_cast<double>(plan.steps[i]) * 3.0 *
                          std::exp(2.0 * plan.beta[i]) * plan.eps_tilde[i];
    if (std::abs(budget - plan.constants.gamma / 4.0) >
        1e-9 * plan.constants.gamma)
      throw InvalidInputError("sampler error budget identity violated");
  }
  return plan;
}

RoundingMap update_rounding(const std::vector<Vector>& points,
                            const RoundingMap& previous) {
  const int n = previous.dim();
  if (static_cast<int>(points.size()) < n + 1)
    throw RoundingError("rounding update needs at least n+1 points");
  Vector mean;
  Matrix cov;
  mapped_moments(points, previous, &mean, &cov);

  Eigen::SelfAdjointEigenSolver<Matrix> eig(cov);
  if (eig.info() != Eigen::Success)
    throw RoundingError("covariance eigendecomposition failed");
  const Vector& lambda = eig.eigenvalues();
  const double max_l = lambda.maxCoeff();
  if (!(max_l > 0.0) || lambda.minCoeff() <= 1e-12 * max_l)
    throw RoundingError("covariance is rank-deficient beyond tolerance");

  Vector inv_sqrt(n);
  for (int i = 0; i < n; ++i) inv_sqrt[i] = 1.0 / std::sqrt(lambda[i]);
  const Matrix factor = eig.eigenvectors() * inv_sqrt.asDiagonal() *
                        eig.eigenvectors().transpose();
  return RoundingMap(factor * previous.matrix(), previous.provenance() + 1);
}

double gibbs_gap_bound(int n, double T, double rho) {
  if (!(T > 0.0)) throw InvalidInputError("temperature must be > 0");
  if (rho < 0.0) throw InvalidInputError("rho must be >= 0");
  return (n + 1) * T * std::exp(2.0 * rho / T);
}

AnnealResult anneal(const ObjectiveOracle& F, const ConvexBody& body,
                    const AnnealingPlan& plan, std::uint64_t master_seed,
                    int threads) {
  const int N = plan.strands;
  const int n = plan.n;
  AnnealResult result;
  result.warnings = plan.warnings;

  // Uniform burn-in from the interior point; consumes no F queries.
  std::vector<Vector> points(N);
  {
    LogTarget uniform{[](const Vector&) { return 0.0; }, 0.0};
    WalkParams wp;
    wp.steps = plan.init_steps;
    wp.sampler.eps_tilde = plan.constants.init_eps_tilde;
    try {
      parallel_strands(N, threads, [&](int j) {
        Rng rng = Rng::stream(master_seed, 0, static_cast<std::uint64_t>(j));
        points[j] =
            walk(uniform, body, body.interior_point(), wp, rng).final_point;
      });
    } catch (const Error& e) {
      result.failed = true;
      result.failure = std::string("initialization failed: ") + e.what();
      return result;
    }
  }

  OracleStats global;
  if (plan.epochs == 0) {
    // Degenerate plan: argmin of F over the uniform initial samples.
    for (const Vector& x : points) F(x, global);
    result.best_point = global.best_point;
    result.best_value = global.best_value;
    result.total_queries = global.queries;
    result.total_evals = global.evals;
    result.final_points = points;
    return result;
  }

  RoundingMap rounding = RoundingMap::identity(n);
  for (int epoch = 1; epoch <= plan.epochs; ++epoch) {
    const double T = plan.temperatures[epoch];

    EpochRecord record;
    record.epoch = epoch;
    record.temperature = T;
    {
      Vector mean;
      Matrix cov;
      mapped_moments(points, rounding, &mean, &cov);
      Eigen::SelfAdjointEigenSolver<Matrix> eig(cov);
      record.cov_eig_min = eig.eigenvalues().minCoeff();
      record.cov_eig_max = eig.eigenvalues().maxCoeff();
    }
    try {
      rounding = update_rounding(points, rounding);
    } catch (const RoundingError& e) {
      std::ostringstream os;
      os << "epoch " << epoch << ": rounding update failed (" << e.what()
         << "); keeping previous map";
      result.warnings.push_back(os.str());
    }
    // Walk directions follow the distribution's principal axes: the
    // accumulated map whitens the points, so directions use its inverse.
    const RoundingMap direction_map = rounding.inverse();

    WalkParams wp;
    wp.steps = plan.steps[epoch];
    wp.rounding = direction_map;
    wp.sampler.eps_tilde = plan.eps_tilde[epoch];

    std::vector<Vector> next(N);
    std::vector<OracleStats> strand_oracle(N);
    std::vector<WalkStats> strand_walk(N);
    const double beta = plan.beta[epoch];
    try {
      parallel_strands(N, threads, [&](int j) {
        Rng rng = Rng::stream(master_seed, static_cast<std::uint64_t>(epoch),
                              static_cast<std::uint64_t>(j));
        OracleStats& stats = strand_oracle[j];
        LogTarget target{
            [&F, &stats, T](const Vector& x) { return -F(x, stats) / T; },
            beta};
        WalkResult w = walk(target, body, points[j], wp, rng);
        next[j] = w.final_point;
        strand_walk[j] = w.stats;
      });
    } catch (const Error& e) {
      std::ostringstream os;
      os << "epoch " << epoch << " failed: " << e.what();
      result.failed = true;
      result.failure = os.str();
      // Partial results: best seen so far plus the failing epoch's stats.
      for (int j = 0; j < N; ++j) global.merge(strand_oracle[j]);
      result.best_point = global.best_point;
      result.best_value = global.best_value;
      result.total_queries = global.queries;
      result.total_evals = global.evals;
      result.final_points = points;
      return result;
    }

    std::int64_t epoch_queries = 0;
    std::vector<double> rates;
    rates.reserve(N);
    double rate_min = 1.0;
    for (int j = 0; j < N; ++j) {
      global.merge(strand_oracle[j]);
      epoch_queries += strand_oracle[j].queries;
      rates.push_back(strand_walk[j].acceptance_rate());
      rate_min = std::min(rate_min, rates.back());
    }
    points.swap(next);

    record.best_value = global.best_value;
    record.queries = epoch_queries;
    record.accept_min = rate_min;
    record.accept_median = median_of(rates);
    result.epoch_log.push_back(record);
  }

  result.best_point = global.best_point;
  result.best_value = global.best_value;
  result.total_queries = global.queries;
  result.total_evals = global.evals;
  result.final_points = points;
  return result;
}

}  // namespace annealopt
