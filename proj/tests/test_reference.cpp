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

#include "annealopt/reference.hpp"

#include <cmath>

#include "annealopt/rng.hpp"
#include "annealopt/targets.hpp"
#include "doctest.h"

using namespace annealopt;

namespace {

Vector vec1(double a) {
  Vector v(1);
  v << a;
  return v;
}

}  // namespace

TEST_CASE("constant log target gives uniform weights") {
  const GridDensity d =
      quadrature_density([](double) { return 0.0; }, 0.0, 1.0, 1001);
  CHECK(std::abs(d.weights.sum() - 1.0) < 1e-12);
  // Interior weights equal; endpoints carry half a cell.
  for (int i = 1; i + 1 < d.nx; ++i)
    CHECK(d.weights[i] == doctest::Approx(1.0 / 1000.0));
}

TEST_CASE("grid mean of the truncated exponential matches the closed form") {
  const GridDensity d =
      quadrature_density([](double x) { return -5.0 * x; }, 0.0, 1.0, 4001);
  const double expected = 0.2 - std::exp(-5.0) / (1.0 - std::exp(-5.0));
  CHECK(std::abs(grid_mean_1d(d) - expected) < 1e-4);
}

TEST_CASE("quadrature is self-convergent under grid refinement") {
  const auto log_g = [](double x) { return -3.0 * (x - 0.4) * (x - 0.4); };
  const GridDensity a = quadrature_density(log_g, 0.0, 1.0, 2001);
  const GridDensity b = quadrature_density(log_g, 0.0, 1.0, 4001);
  const double mean_a = grid_mean_1d(a);
  const double mean_b = grid_mean_1d(b);
  CHECK(std::abs(mean_a - mean_b) < 1e-6);
}

TEST_CASE("tv distance identities") {
  const GridDensity p =
      quadrature_density([](double) { return 0.0; }, 0.0, 1.0, 10000);
  CHECK(tv_distance(p, p) == 0.0);

  // Disjoint supports.
  const GridDensity left = quadrature_density(
      [](double x) {
        return x < 0.5 ? 0.0 : -std::numeric_limits<double>::infinity();
      },
      0.0, 1.0, 10000);
  const GridDensity right = quadrature_density(
      [](double x) {
        return x > 0.5 ? 0.0 : -std::numeric_limits<double>::infinity();
      },
      0.0, 1.0, 10000);
  CHECK(tv_distance(left, right) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("tv of uniform vs exp(-5x) matches the closed-form integral") {
  const GridDensity uniform =
      quadrature_density([](double) { return 0.0; }, 0.0, 1.0, 10000);
  const GridDensity expd =
      quadrature_density([](double x) { return -5.0 * x; }, 0.0, 1.0, 10000);
  // Density 5 e^{-5x}/(1-e^{-5}) crosses 1 at x0; TV = int_0^{x0} (q - 1).
  const double z = 1.0 - std::exp(-5.0);
  const double x0 = std::log(5.0 / z) / 5.0;
  const double expected = (1.0 - std::exp(-5.0 * x0)) / z - x0;
  CHECK(std::abs(tv_distance(uniform, expd) - expected) < 1e-4);
}

TEST_CASE("tv is a metric on shared grids") {
  Rng rng(9);
  const auto random_density = [&](double a, double b, double c) {
    return quadrature_density(
        [=](double x) { return a * std::sin(b * x + c); }, 0.0, 1.0, 500);
  };
  for (int trial = 0; trial < 10; ++trial) {
    const GridDensity p =
        random_density(rng.uniform(0.0, 2.0), rng.uniform(1.0, 9.0),
                       rng.uniform(0.0, 6.0));
    const GridDensity q =
        random_density(rng.uniform(0.0, 2.0), rng.uniform(1.0, 9.0),
                       rng.uniform(0.0, 6.0));
    const GridDensity r =
        random_density(rng.uniform(0.0, 2.0), rng.uniform(1.0, 9.0),
                       rng.uniform(0.0, 6.0));
    CHECK(tv_distance(p, q) == doctest::Approx(tv_distance(q, p)));
    CHECK(tv_distance(p, r) <= tv_distance(p, q) + tv_distance(q, r) + 1e-12);
  }
}

TEST_CASE("warm-start ratio of a constant objective is one") {
  const WarmStartNorm w = warm_start_norm(
      [](const Vector&) { return 3.0; }, 1.0, 0.5, vec1(0.0), vec1(1.0));
  CHECK(w.ratio == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("warm-start ratio of a linear objective stays under the bound") {
  // Ratio at the halving schedule: Y(0) Y(2) / Y(1)^2 with
  // Y(a) = (1 - e^{-a})/a.
  const auto F = [](const Vector& x) { return x[0]; };
  const WarmStartNorm w = warm_start_norm(F, 1.0, 0.5, vec1(0.0), vec1(1.0));
  const double y2 = (1.0 - std::exp(-2.0)) / 2.0;
  const double y1 = 1.0 - std::exp(-1.0);
  CHECK(w.ratio == doctest::Approx(y2 / (y1 * y1)).epsilon(1e-6));
  CHECK(w.ratio <= 5.0);
}

TEST_CASE("warm-start ratio under a perturbation respects the defect bound") {
  const auto F = [](const Vector& x) {
    return x[0] + 0.1 * std::sin(25.0 * x[0]);
  };
  const double beta = 0.2;
  const WarmStartNorm w = warm_start_norm(F, 1.0, 0.5, vec1(0.0), vec1(1.0));
  CHECK(w.ratio <= 5.0 * std::exp(2.0 * beta / 1.0));
}

TEST_CASE("warm-start quadrature is stable at low temperature") {
  const auto F = [](const Vector& x) { return (x[0] - 0.4) * (x[0] - 0.4); };
  const double q = 2.0 / 3.0;
  const double T = 0.002;
  const WarmStartNorm a = warm_start_norm(F, T, q * T, vec1(0.0), vec1(1.0), 1500);
  const WarmStartNorm b = warm_start_norm(F, T, q * T, vec1(0.0), vec1(1.0), 3000);
  CHECK(std::abs(a.log_ratio - b.log_ratio) < 1e-6);
}

TEST_CASE("gibbs gap examples") {
  const auto id = [](const Vector& x) { return x[0]; };
  // Sharp temperature: mean of the truncated exponential at T=0.01.
  GibbsGap g = gibbs_mean_gap(id, id, 0.01, vec1(0.0), vec1(1.0), 20001);
  CHECK(g.gap == doctest::Approx(0.01).epsilon(1e-3));
  CHECK(g.gap <= g.bound);
  CHECK(g.bound == doctest::Approx(0.02));

  // Uniform limit: gap -> 1/2 <= (n+1) T for T >= 1/4.
  g = gibbs_mean_gap(id, id, 50.0, vec1(0.0), vec1(1.0), 20001);
  CHECK(g.gap == doctest::Approx(0.5).epsilon(1e-2));
  CHECK(g.gap <= g.bound);

  // Perturbed objective at T = 0.05.
  const auto F = [](const Vector& x) {
    return x[0] + 0.05 * std::sin(30.0 * x[0]);
  };
  g = gibbs_mean_gap(id, F, 0.05, vec1(0.0), vec1(1.0), 20001);
  CHECK(g.rho == doctest::Approx(0.05).epsilon(1e-3));
  CHECK(g.gap <= 2.0 * 0.05 * std::exp(2.0 * g.rho / 0.05));
  CHECK(g.gap <= g.bound);
}

TEST_CASE("beta certification accepts within and rejects below the defect") {
  Rng rng(2024);
  const auto log_g = [](const Vector& x) {
    const double s = std::sin(100.0 * x[0]);
    return -x[0] * x[0] + 0.1 * (s > 0 ? 1.0 : (s < 0 ? -1.0 : 0.0));
  };
  const Vector lo = vec1(-2.0);
  const Vector hi = vec1(2.0);

  const BetaCertificate ok = certify_beta_log_concave(
      [](const Vector& x) { return -x[0] * x[0]; }, lo, hi, 0.0, 20000, rng);
  CHECK(ok.pass);

  const BetaCertificate within =
      certify_beta_log_concave(log_g, lo, hi, 0.2, 20000, rng);
  CHECK(within.pass);

  const BetaCertificate below =
      certify_beta_log_concave(log_g, lo, hi, 0.05, 20000, rng);
  CHECK_FALSE(below.pass);
  CHECK(below.worst_violation > 0.0);
}

TEST_CASE("registered verify targets carry valid defects") {
  Rng rng(31337);
  for (const auto& t : verify_targets()) {
    const auto log_g = [&t](const Vector& x) { return -t.F(x); };
    const BetaCertificate cert =
        certify_beta_log_concave(log_g, t.lo, t.hi, t.beta, 20000, rng);
    CHECK_MESSAGE(cert.pass, t.name);
  }
}
