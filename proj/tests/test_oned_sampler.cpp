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

#include "annealopt/oned_sampler.hpp"

#include <cmath>
#include <vector>

#include "annealopt/reference.hpp"
#include "annealopt/rng.hpp"
#include "annealopt/targets.hpp"
#include "doctest.h"

using namespace annealopt;

namespace {

ChordFunction make_chord(std::function<double(double)> log_g, double beta,
                         double lo = 0.0, double hi = 1.0) {
  ChordFunction g;
  g.log_value = std::move(log_g);
  g.beta = beta;
  g.lo = lo;
  g.hi = hi;
  return g;
}

// Independent oracle: max of log g over a dense grid.
double grid_max(const ChordFunction& g, int points = 10001) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double x = g.lo + (g.hi - g.lo) * i / (points - 1);
    best = std::max(best, g.log_value(x));
  }
  return best;
}

}  // namespace

TEST_CASE("near-max on a flat target returns a quarter point") {
  const ChordFunction g = make_chord([](double) { return 0.0; }, 0.1);
  SamplerParams params;
  const NearMaxResult r = find_near_max(g, params);
  const bool quarter = r.offset == doctest::Approx(0.25) ||
                       r.offset == doctest::Approx(0.5) ||
                       r.offset == doctest::Approx(0.75);
  CHECK(quarter);
  CHECK(r.iterations == 1);
}

TEST_CASE("near-max certificate on a smooth peak") {
  const ChordFunction g = make_chord(
      [](double x) { return -(x - 0.3) * (x - 0.3); }, 0.01);
  SamplerParams params;
  const NearMaxResult r = find_near_max(g, params);
  // log g(p) >= max - 3 beta_eff  <=>  (p - 0.3)^2 <= 0.03.
  CHECK(std::abs(r.offset - 0.3) <= 0.17321);
  CHECK(r.log_value >= grid_max(g) - 3.0 * 0.01 - 1e-12);
}

TEST_CASE("near-max certificate under a bounded perturbation") {
  const ChordFunction g = make_chord(
      [](double x) {
        return -5.0 * std::abs(x - 0.7) + 0.05 * std::sin(60.0 * x);
      },
      0.1);
  SamplerParams params;
  const NearMaxResult r = find_near_max(g, params);
  CHECK(r.log_value >= grid_max(g) - 0.3 - 1e-12);
}

TEST_CASE("near-max certificate across the registered suite") {
  SamplerParams params;
  for (const auto& target : sampler_targets()) {
    const ChordFunction g =
        make_chord(target.log_g, target.beta, target.lo, target.hi);
    const NearMaxResult r = find_near_max(g, params);
    const double beta_eff = std::max(target.beta, params.beta_floor);
    CHECK_MESSAGE(r.log_value >= grid_max(g) - 3.0 * beta_eff - 1e-12,
                  target.name);
  }
}

TEST_CASE("tail point returns the endpoint for a constant target") {
  const ChordFunction g = make_chord([](double) { return -1.0; }, 0.0);
  SamplerParams params;
  params.eps_tilde = 0.01;
  const TailPoint t = find_tail_point(g, TailSide::right, 0.5, params);
  CHECK(t.at_endpoint);
  CHECK(t.offset == 1.0);
}

TEST_CASE("tail point brackets the closed-form inversion of exp(-10x)") {
  ChordFunction g = make_chord([](double x) { return -10.0 * x; }, 0.0, 0.0,
                               3.0);
  SamplerParams params;
  params.eps_tilde = 0.01;
  const TailPoint t = find_tail_point(g, TailSide::right, 0.0, params);
  CHECK_FALSE(t.at_endpoint);
  // g(e) in [eps g(p)/2, eps g(p)] <=> e in [-log(0.01)/10, -log(0.005)/10].
  CHECK(t.offset >= -std::log(0.01) / 10.0 - 1e-12);
  CHECK(t.offset <= -std::log(0.005) / 10.0 + 1e-12);
}

TEST_CASE("tail bracket holds under perturbation by direct re-evaluation") {
  ChordFunction g = make_chord(
      [](double x) { return -10.0 * x + 0.05 * std::sin(70.0 * x); }, 0.1,
      0.0, 3.0);
  SamplerParams params;
  params.eps_tilde = 0.01;
  const double log_gp = g.log_value(0.0);
  const TailPoint t = find_tail_point(g, TailSide::right, 0.0, params);
  REQUIRE_FALSE(t.at_endpoint);
  const double y = g.log_value(t.offset);
  const double upper = log_gp + std::log(params.eps_tilde);
  const double lower = upper - g.beta - std::log(2.0);
  CHECK(y >= lower - 1e-12);
  CHECK(y <= upper + 1e-12);
}

TEST_CASE("uniform target accepts immediately and has the right mean") {
  const ChordFunction g = make_chord([](double) { return 0.0; }, 0.0);
  SamplerParams params;
  params.eps_tilde = 1e-3;
  Rng rng(123);

  const ChordSample first = sample_chord(g, params, rng);
  CHECK(first.init.lo_tail.offset == 0.0);
  CHECK(first.init.hi_tail.offset == 1.0);
  CHECK(first.attempts == 1);

  double sum = first.offset;
  const int n = 100000;
  for (int i = 1; i < n; ++i) sum += sample_chord(g, params, rng).offset;
  CHECK(std::abs(sum / n - 0.5) < 0.005);
}

TEST_CASE("sampler matches quadrature for exp(-5x)") {
  const ChordFunction g = make_chord([](double x) { return -5.0 * x; }, 0.0);
  SamplerParams params;
  params.eps_tilde = 1e-3;
  Rng rng(99);
  std::vector<double> samples;
  samples.reserve(100000);
  for (int i = 0; i < 100000; ++i)
    samples.push_back(sample_chord(g, params, rng).offset);
  const GridDensity density =
      quadrature_density([](double x) { return -5.0 * x; }, 0.0, 1.0, 10000);
  CHECK(binned_tv_1d(density, samples, 100) <= 0.02);
}

TEST_CASE("sampler tv bound for a perturbed target") {
  const auto log_g = [](double x) {
    return -5.0 * x + 0.04 * std::sin(50.0 * x);
  };
  const ChordFunction g = make_chord(log_g, 0.08);
  SamplerParams params;
  params.eps_tilde = 1e-3;
  Rng rng(7);
  std::vector<double> samples;
  samples.reserve(100000);
  for (int i = 0; i < 100000; ++i)
    samples.push_back(sample_chord(g, params, rng).offset);
  const GridDensity density = quadrature_density(log_g, 0.0, 1.0, 10000);
  const double tv = binned_tv_1d(density, samples, 100);
  CHECK(tv <= 3.0 * std::exp(0.16) * 1e-3 + 0.015);
}

TEST_CASE("acceptance rate clears the proof lower bound") {
  SamplerParams params;
  params.eps_tilde = 1e-3;
  for (const auto& target : sampler_targets()) {
    const ChordFunction g =
        make_chord(target.log_g, target.beta, target.lo, target.hi);
    Rng rng(5);
    std::int64_t attempts = 0;
    std::int64_t accepts = 0;
    while (attempts < 10000) {
      const ChordSample s = sample_chord(g, params, rng);
      attempts += s.attempts;
      accepts += 1;
    }
    const double p_hat = static_cast<double>(accepts) / attempts;
    const double sigma_hat =
        std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(attempts));
    const double bound = std::exp(-5.0 * target.beta) * std::log(2.0) /
                         (2.0 * std::log(2.0 / params.eps_tilde));
    CHECK_MESSAGE(p_hat >= bound - 3.0 * sigma_hat, target.name);
  }
}

TEST_CASE("eq-5 bracket re-evaluates cleanly across the suite") {
  SamplerParams params;
  params.eps_tilde = 1e-3;
  Rng seeds(88);
  for (const auto& target : sampler_targets()) {
    // Full chord plus random sub-chords.
    for (int trial = 0; trial < 25; ++trial) {
      double lo = target.lo;
      double hi = target.hi;
      if (trial > 0) {
        const double a = seeds.uniform(target.lo, target.hi);
        const double b = seeds.uniform(target.lo, target.hi);
        lo = std::min(a, b);
        hi = std::max(a, b);
        if (hi - lo < 0.05) continue;
      }
      const ChordFunction g = make_chord(target.log_g, target.beta, lo, hi);
      const ChordInit init = init_chord_sampler(g, params);
      const double log_eps_gp = init.log_gp + std::log(params.eps_tilde);
      for (const TailPoint* t : {&init.lo_tail, &init.hi_tail}) {
        if (t->at_endpoint) continue;
        const double y = target.log_g(t->offset);
        CHECK(y <= log_eps_gp + 1e-12);
        CHECK(y >= log_eps_gp - target.beta - std::log(2.0) - 1e-12);
      }
    }
  }
}

TEST_CASE("determinism: identical seed gives identical draws and counts") {
  const auto log_g = [](double x) {
    return -3.0 * x + 0.1 * std::sin(20.0 * x);
  };
  const ChordFunction g = make_chord(log_g, 0.2);
  SamplerParams params;
  params.eps_tilde = 1e-4;
  Rng a(4242), b(4242);
  for (int i = 0; i < 200; ++i) {
    const ChordSample sa = sample_chord(g, params, a);
    const ChordSample sb = sample_chord(g, params, b);
    CHECK(sa.offset == sb.offset);
    CHECK(sa.evals == sb.evals);
    CHECK(sa.attempts == sb.attempts);
  }
}

TEST_CASE("evaluation count stays within the configured budget") {
  SamplerParams params;
  params.eps_tilde = 1e-3;
  // Hard cap: three evals per shrink iteration, two bisection runs, plus
  // one eval per attempt.
  const std::int64_t cap =
      3LL * params.max_bisection_iters + 2LL * (params.max_bisection_iters + 4)
      + 4000;
  Rng rng(31);
  for (const auto& target : sampler_targets()) {
    const ChordFunction g =
        make_chord(target.log_g, target.beta, target.lo, target.hi);
    for (int i = 0; i < 50; ++i) {
      const ChordSample s = sample_chord(g, params, rng);
      CHECK(s.evals <= cap);
    }
  }
}

TEST_CASE("near-max iteration cap carries the best point so far") {
  // A huge log-space slope forces the shrink loop past its cap before the
  // flat branch can fire.
  const ChordFunction g = make_chord(
      [](double x) { return -1e30 * std::abs(x - 0.3); }, 0.0);
  SamplerParams params;
  params.beta_floor = 1e-12;
  params.max_bisection_iters = 40;
  try {
    find_near_max(g, params);
    FAIL("expected a sampler error");
  } catch (const SamplerError& e) {
    REQUIRE(e.best_offset.has_value());
    CHECK(std::abs(*e.best_offset - 0.3) < 0.1);
  }
}

TEST_CASE("rejection budget exhaustion is a sampler error") {
  const ChordFunction g = make_chord([](double x) { return -50.0 * x; }, 0.0);
  SamplerParams params;
  params.eps_tilde = 1e-3;
  params.max_rejections = 1;
  // Scan for a stream whose first proposal is rejected; the error must
  // surface rather than loop.
  bool saw_error = false;
  for (std::uint64_t seed = 0; seed < 64 && !saw_error; ++seed) {
    Rng rng(seed);
    try {
      sample_chord(g, params, rng);
    } catch (const SamplerError&) {
      saw_error = true;
    }
  }
  CHECK(saw_error);
}

TEST_CASE("degenerate targets are rejected") {
  SamplerParams params;
  const ChordFunction zero = make_chord(
      [](double) { return -std::numeric_limits<double>::infinity(); }, 0.0);
  Rng rng(1);
  CHECK_THROWS_AS(sample_chord(zero, params, rng), SamplerError);

  // eps_tilde outside (0, e^{-2 beta}/2).
  SamplerParams bad;
  bad.eps_tilde = 0.4;
  const ChordFunction g = make_chord([](double) { return 0.0; }, 0.5);
  CHECK_THROWS_AS(sample_chord(g, bad, rng), InvalidInputError);
}
