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
#include <vector>

#include "annealopt/rng.hpp"
#include "doctest.h"

using namespace annealopt;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("grid snap basics") {
  const GridCell a = grid_snap(vec2(0.4, -0.7), 1.0);
  CHECK(a.index[0] == 0);
  CHECK(a.index[1] == -1);

  // Exact ties round toward minus infinity.
  const GridCell b = grid_snap(vec2(0.25, 0.25), 0.5);
  CHECK(b.index[0] == 0);
  CHECK(b.index[1] == 0);
  const GridCell c = grid_snap(vec2(-0.25, 0.75), 0.5);
  CHECK(c.index[0] == -1);
  CHECK(c.index[1] == 1);

  // On-grid points are fixed points of the snap.
  const Vector x = vec2(0.75, -1.5);
  const GridCell d = grid_snap(x, 0.25);
  CHECK(cell_point(d, 0.25) == x);
}

TEST_CASE("noiseless oracle is exact and repeatable") {
  StochasticOracleConfig cfg;
  cfg.sigma = 0.0;
  cfg.alpha = 1e-4;
  cfg.tau = 1;
  cfg.box_radius = 2.0;
  const auto f = [](const Vector& x) { return x.squaredNorm(); };
  const Vector x = vec2(0.3, -0.4);
  const double v1 = stochastic_query(f, cfg, x);
  const double v2 = stochastic_query(f, cfg, x);
  CHECK(v1 == v2);
  const Vector snapped = cell_point(grid_snap(x, cfg.alpha), cfg.alpha);
  CHECK(v1 == f(snapped));
}

TEST_CASE("same cell always returns the same value") {
  StochasticOracleConfig cfg;
  cfg.sigma = 1.0;
  cfg.alpha = 0.1;
  cfg.tau = 7;
  cfg.master_seed = 99;
  cfg.box_radius = 2.0;
  const auto f = [](const Vector&) { return 0.0; };
  // Two nearby points snapping to one cell.
  const double v1 = stochastic_query(f, cfg, vec2(0.5204, 0.299));
  const double v2 = stochastic_query(f, cfg, vec2(0.48, 0.3304));
  CHECK(grid_snap(vec2(0.5204, 0.299), cfg.alpha) ==
        grid_snap(vec2(0.48, 0.3304), cfg.alpha));
  CHECK(v1 == v2);
}

TEST_CASE("per-cell noise has standard deviation sigma over sqrt(tau)") {
  StochasticOracleConfig cfg;
  cfg.sigma = 1.0;
  cfg.alpha = 0.01;
  cfg.tau = 100;
  cfg.master_seed = 7;
  cfg.box_radius = 200.0;
  const auto f = [](const Vector&) { return 0.0; };
  const int cells = 10000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < cells; ++i) {
    const Vector x = vec2(0.01 * i, -0.01 * i);
    const double v = stochastic_query(f, cfg, x);
    sum += v;
    sum2 += v * v;
  }
  const double mean = sum / cells;
  const double sd = std::sqrt(sum2 / cells - mean * mean);
  CHECK(sd >= 0.095);
  CHECK(sd <= 0.105);
}

TEST_CASE("noise across distinct cells is uncorrelated") {
  const int pairs = 10000;
  double sum_xy = 0.0, sum_x = 0.0, sum_y = 0.0, sum_x2 = 0.0, sum_y2 = 0.0;
  for (int i = 0; i < pairs; ++i) {
    GridCell a{{i, 17}};
    GridCell b{{i, -4}};
    const double x = cell_noise(5, a);
    const double y = cell_noise(5, b);
    sum_xy += x * y;
    sum_x += x;
    sum_y += y;
    sum_x2 += x * x;
    sum_y2 += y * y;
  }
  const double n = pairs;
  const double corr =
      (sum_xy / n - sum_x / n * sum_y / n) /
      std::sqrt((sum_x2 / n - sum_x / n * sum_x / n) *
                (sum_y2 / n - sum_y / n * sum_y / n));
  CHECK(std::abs(corr) <= 3.0 / std::sqrt(n));
}

TEST_CASE("parameter solver instances") {
  const StochasticParams p = stochastic_params(2, 0.1, 1.0, 1.0, 1.0, 0.1);
  CHECK(p.alpha == doctest::Approx(0.025));
  CHECK(p.tau == 30978);  // ceil of 4 * (16 log 40 + 8 log 10) / 0.01

  const StochasticParams noiseless =
      stochastic_params(2, 0.1, 0.0, 1.0, 1.0, 0.1);
  CHECK(noiseless.tau == 1);

  // Halving epsilon grows tau by more than 4x.
  const StochasticParams fine = stochastic_params(2, 0.05, 1.0, 1.0, 1.0, 0.1);
  CHECK(fine.tau >= 4 * p.tau);

  // Degenerate net.
  CHECK_THROWS_AS(stochastic_params(1, 10.0, 1.0, 1.0, 1.0, 0.1), ConfigError);
}

TEST_CASE("wrapped oracle meets the probe bound") {
  const int n = 2;
  const double eps = 0.1;
  const double L = 4.0;
  const double R = 1.0;
  const double delta = 0.1;
  const auto f = [](const Vector& x) { return x.squaredNorm(); };

  SUBCASE("noiseless: bias only") {
    StochasticOracleConfig cfg = make_stochastic_config(n, eps, 0.0, L, R,
                                                        delta, 1);
    const ObjectiveOracle oracle = wrap_as_approx_convex(f, cfg);
    OracleStats stats;
    Rng rng(22);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const Vector x = vec2(rng.uniform(-1, 1), rng.uniform(-1, 1));
      worst = std::max(worst, std::abs(oracle(x, stats) - f(x)));
    }
    CHECK(worst <= cfg.alpha * L);
    CHECK(stats.queries == stats.evals);  // tau = 1
  }

  SUBCASE("noisy: noise term plus bias, most seeds") {
    int hits = 0;
    const int seeds = 20;
    for (int seed = 0; seed < seeds; ++seed) {
      StochasticOracleConfig cfg =
          make_stochastic_config(n, eps, 1.0, L, R, delta, seed);
      const ObjectiveOracle oracle = wrap_as_approx_convex(f, cfg);
      OracleStats stats;
      Rng rng(1000 + seed);
      double worst = 0.0;
      for (int i = 0; i < 10000; ++i) {
        const Vector x = vec2(rng.uniform(-1, 1), rng.uniform(-1, 1));
        worst = std::max(worst, std::abs(oracle(x, stats) - f(x)));
      }
      const double noise_bound =
          1.0 * std::sqrt((2.0 * n * std::log(R / cfg.alpha) +
                           2.0 * std::log(1.0 / delta)) /
                          static_cast<double>(cfg.tau));
      if (worst <= noise_bound + cfg.alpha * L) ++hits;
    }
    CHECK(hits >= 19);
  }

  SUBCASE("large tau kills the noise") {
    StochasticOracleConfig cfg = make_stochastic_config(n, eps, 1.0, L, R,
                                                        delta, 3);
    cfg.tau = 1000000000;
    const ObjectiveOracle oracle = wrap_as_approx_convex(f, cfg);
    OracleStats stats;
    Rng rng(4);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
      const Vector x = vec2(rng.uniform(-1, 1), rng.uniform(-1, 1));
      worst = std::max(worst, std::abs(oracle(x, stats) - f(x)));
    }
    CHECK(worst <= cfg.alpha * L + 1e-3);
  }
}

TEST_CASE("query billing is tau per call, exactly") {
  StochasticOracleConfig cfg = make_stochastic_config(2, 0.1, 1.0, 1.0, 1.0,
                                                      0.1, 11);
  const ObjectiveOracle oracle =
      wrap_as_approx_convex([](const Vector&) { return 0.0; }, cfg);
  OracleStats stats;
  Rng rng(5);
  const int calls = 1234;
  for (int i = 0; i < calls; ++i) {
    const Vector x = vec2(rng.uniform(-1, 1), rng.uniform(-1, 1));
    oracle(x, stats);
  }
  CHECK(stats.evals == calls);
  CHECK(stats.queries == static_cast<std::int64_t>(calls) * cfg.tau);
}

TEST_CASE("queries outside the gridded box are domain errors") {
  StochasticOracleConfig cfg;
  cfg.sigma = 0.0;
  cfg.alpha = 0.1;
  cfg.tau = 1;
  cfg.box_radius = 1.0;
  const auto f = [](const Vector&) { return 0.0; };
  CHECK_THROWS_AS(stochastic_query(f, cfg, vec2(1.5, 0.0)), DomainError);
}
