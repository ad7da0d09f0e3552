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

#include "annealopt/zeroth_order.hpp"

#include <cmath>
#include <utility>

#include "annealopt/rng.hpp"

namespace annealopt {

GridCell grid_snap(const Vector& x, double alpha) {
  if (!(alpha > 0.0)) throw InvalidInputError("grid pitch must be > 0");
  GridCell cell;
  cell.index.resize(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]))
      throw InvalidInputError("grid snap of non-finite coordinate");
    // Round half down: ceil(t - 1/2).
    cell.index[i] = static_cast<std::int64_t>(std::ceil(x[i] / alpha - 0.5));
  }
  return cell;
}

Vector cell_point(const GridCell& cell, double alpha) {
  Vector x(cell.index.size());
  for (size_t i = 0; i < cell.index.size(); ++i)
    x[static_cast<Eigen::Index>(i)] = alpha * static_cast<double>(cell.index[i]);
  return x;
}

double cell_noise(std::uint64_t seed, const GridCell& cell) {
  std::uint64_t h = mix64(seed ^ 0x5bf03635d0d6c8a5ULL);
  for (std::int64_t idx : cell.index)
    h = hash_combine(h, static_cast<std::uint64_t>(idx));
  // Two independent uniforms from the keyed hash, then Box-Muller.
  const std::uint64_t w1 = mix64(h ^ 0x1fULL);
  const std::uint64_t w2 = mix64(h ^ 0x2fULL);
  const double u1 = (static_cast<double>(w1 >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(w2 >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double stochastic_query(const std::function<double(const Vector&)>& f,
                        const StochasticOracleConfig& cfg, const Vector& x) {
  const GridCell cell = grid_snap(x, cfg.alpha);
  const Vector snapped = cell_point(cell, cfg.alpha);
  for (Eigen::Index i = 0; i < snapped.size(); ++i) {
    if (std::abs(snapped[i]) > cfg.box_radius + 0.5 * cfg.alpha)
      throw DomainError("query outside the gridded box");
  }
  double value = f(snapped);
  if (cfg.sigma > 0.0) {
    value += cfg.sigma / std::sqrt(static_cast<double>(cfg.tau)) *
             cell_noise(cfg.master_seed, cell);
  }
  return value;
}

StochasticParams stochastic_params(int n, double epsilon, double sigma,
                                   double L, double R, double delta) {
  if (n < 1) throw InvalidInputError("dimension must be >= 1");
  if (!(epsilon > 0.0) || !(L > 0.0) || !(R > 0.0))
    throw InvalidInputError("epsilon, L and R must be > 0");
  if (sigma < 0.0) throw InvalidInputError("sigma must be >= 0");
  if (!(delta > 0.0) || !(delta < 1.0))
    throw InvalidInputError("delta must lie in (0, 1)");

  StochasticParams out;
  out.alpha = epsilon / (2.0 * L * n);
  if (!(R / out.alpha > 1.0))
    throw ConfigError("net degenerate: R / alpha <= 1");
  if (sigma == 0.0) {
    out.tau = 1;  // noiseless: a single query is exact
    return out;
  }
  const double nd = static_cast<double>(n);
  const double tau = sigma * sigma * nd * nd *
                     (8.0 * nd * std::log(R / out.alpha) +
                      8.0 * std::log(1.0 / delta)) /
                     (epsilon * epsilon);
  out.tau = static_cast<std::int64_t>(std::ceil(tau));
  return out;
}

StochasticOracleConfig make_stochastic_config(int n, double epsilon,
                                              double sigma, double L, double R,
                                              double delta,
                                              std::uint64_t master_seed) {
  const StochasticParams params = stochastic_params(n, epsilon, sigma, L, R, delta);
  StochasticOracleConfig cfg;
  cfg.sigma = sigma;
  cfg.alpha = params.alpha;
  cfg.tau = params.tau;
  cfg.master_seed = master_seed;
  cfg.box_radius = R;
  cfg.declared_rho = epsilon / static_cast<double>(n);
  return cfg;
}

ObjectiveOracle wrap_as_approx_convex(std::function<double(const Vector&)> f,
                                      const StochasticOracleConfig& cfg) {
  if (!(cfg.alpha > 0.0) || cfg.tau < 1)
    throw InvalidInputError("oracle config requires alpha > 0 and tau >= 1");
  auto fn = [f = std::move(f), cfg](const Vector& x) {
    return stochastic_query(f, cfg, x);
  };
  return ObjectiveOracle(std::move(fn), cfg.declared_rho, cfg.tau,
                         "grid-snapped stochastic oracle");
}

}  // namespace annealopt
