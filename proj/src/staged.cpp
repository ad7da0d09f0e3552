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

#include "annealopt/staged.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "annealopt/objective.hpp"

namespace annealopt {

double DecayModel::delta(double r) const {
  if (r < 0.0) throw InvalidInputError("Delta evaluated at negative radius");
  switch (kind) {
    case Kind::polynomial:
      return c * std::pow(r, p);
    case Kind::logarithmic:
      return c * std::log1p(d * r);
    case Kind::custom: {
      if (!custom) throw InvalidInputError("custom decay model not set");
      const double v = custom(r);
      if (!std::isfinite(v) || v < 0.0)
        throw InvalidInputError("custom Delta must be finite and >= 0");
      return v;
    }
  }
  throw InvalidInputError("unknown decay model kind");
}

DecayModel DecayModel::polynomial(double c, double p, double alpha, double C) {
  if (c < 0.0) throw InvalidInputError("polynomial decay needs c >= 0");
  if (!(p > 0.0) || !(p < 2.0))
    throw InvalidInputError("polynomial decay needs 0 < p < 2");
  if (!(alpha > 0.0) || !(C > 0.0))
    throw InvalidInputError("alpha and C must be > 0");
  DecayModel m;
  m.kind = Kind::polynomial;
  m.c = c;
  m.p = p;
  m.alpha = alpha;
  m.C = C;
  return m;
}

DecayModel DecayModel::logarithmic(double c, double d, double alpha, double C) {
  if (c < 0.0 || !(d > 0.0))
    throw InvalidInputError("logarithmic decay needs c >= 0 and d > 0");
  if (!(alpha > 0.0) || !(C > 0.0))
    throw InvalidInputError("alpha and C must be > 0");
  DecayModel m;
  m.kind = Kind::logarithmic;
  m.c = c;
  m.d = d;
  m.alpha = alpha;
  m.C = C;
  return m;
}

DecayModel DecayModel::custom_model(std::function<double(double)> delta,
                                    double alpha, double C) {
  if (!delta) throw InvalidInputError("custom decay model needs Delta");
  if (!(alpha > 0.0) || !(C > 0.0))
    throw InvalidInputError("alpha and C must be > 0");
  DecayModel m;
  m.kind = Kind::custom;
  m.custom = std::move(delta);
  m.alpha = alpha;
  m.C = C;
  return m;
}

double next_radius(const DecayModel& model, int n, double r_t) {
  if (!(r_t > 0.0)) throw InvalidInputError("radius must be > 0");
  if (n < 1) throw InvalidInputError("dimension must be >= 1");
  const double d = model.delta(3.0 * r_t);
  return std::sqrt(2.0 * model.C * static_cast<double>(n) * d / model.alpha);
}

namespace {

// (alpha / 2 C n) r^2 - Delta(3 r); the critical radius is its positive
// root.
double fixed_point_residual(const DecayModel& model, int n, double r) {
  return model.alpha / (2.0 * model.C * n) * r * r - model.delta(3.0 * r);
}

double bisect_critical(const DecayModel& model, int n) {
  // Near zero the Delta term dominates (residual < 0); find an upper
  // bracket by doubling.
  double lo = 0.0;
  double hi = 1.0;
  int tries = 0;
  while (fixed_point_residual(model, n, hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++tries > 200)
      throw SolverError("no sign change found for the critical radius");
  }
  if (lo == 0.0) {
    // Shrink toward zero until the residual is negative; if it never is,
    // Delta vanishes too fast and the only fixed point is 0.
    double probe = hi / 2.0;
    while (probe > 1e-300 && fixed_point_residual(model, n, probe) > 0.0)
      probe /= 2.0;
    if (probe <= 1e-300) return 0.0;
    lo = probe;
  }
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (fixed_point_residual(model, n, mid) <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-10 * std::max(1.0, lo)) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double critical_radius(const DecayModel& model, int n) {
  if (n < 1) throw InvalidInputError("dimension must be >= 1");
  switch (model.kind) {
    case DecayModel::Kind::polynomial: {
      if (model.c == 0.0) return 0.0;
      const double base = 2.0 * std::pow(3.0, model.p) * model.c * model.C *
                          static_cast<double>(n) / model.alpha;
      return std::pow(base, 1.0 / (2.0 - model.p));
    }
    case DecayModel::Kind::logarithmic:
      if (model.c == 0.0) return 0.0;
      return bisect_critical(model, n);
    case DecayModel::Kind::custom:
      if (model.delta(0.0) == 0.0 && model.delta(1e-6) == 0.0 &&
          model.delta(1.0) == 0.0 && model.delta(8.0) == 0.0)
        return 0.0;
      return bisect_critical(model, n);
  }
  throw InvalidInputError("unknown decay model kind");
}

namespace {

// Probe-based containment check of B(center, radius) in the enclosing
// body: axis directions plus a fixed fan of pseudo-random ones.
bool ball_inside(const ConvexBody& body, const Vector& center, double radius) {
  const int n = body.dim();
  if (!body.contains(center)) return false;
  for (int i = 0; i < n; ++i) {
    Vector e = Vector::Zero(n);
    e[i] = radius;
    if (!body.contains(center + e) || !body.contains(center - e)) return false;
  }
  Rng rng(0xba11c4ecull);
  for (int k = 0; k < 32; ++k) {
    Vector u = rng.normal_vector(n);
    const double norm = u.norm();
    if (norm == 0.0) continue;
    if (!body.contains(center + (radius / norm) * u)) return false;
  }
  return true;
}

}  // namespace

StagedResult staged_optimize(const std::function<double(const Vector&)>& F,
                             const ConvexBody& enclosing,
                             const DecayModel& model, const Vector& x0,
                             double r0, const StagedOptions& options) {
  if (!(r0 > 0.0)) throw InvalidInputError("r0 must be > 0");
  if (!(options.eps_rel > 0.0))
    throw InvalidInputError("eps_rel must be > 0");
  const int n = enclosing.dim();
  if (x0.size() != n) throw InvalidInputError("x0 dimension mismatch");
  if (!ball_inside(enclosing, x0, 2.0 * r0))
    throw InvalidInputError("B(x0, 2 r0) is not inside the enclosing body");

  StagedResult result;
  result.x_final = x0;
  result.best_value = std::numeric_limits<double>::infinity();

  const double r_star = critical_radius(model, n);
  if (r0 <= (1.0 + options.eps_rel) * r_star) {
    std::ostringstream os;
    os << "r0 = " << r0 << " is already within (1 + eps_rel) of the critical "
       << "radius r* = " << r_star << "; no stage can certify progress";
    result.note = os.str();
    return result;
  }

  Vector center = x0;
  double radius = r0;
  double prev_radius = std::numeric_limits<double>::infinity();

  for (int stage = 1; stage <= options.max_stages; ++stage) {
    const double rho_t = model.delta(3.0 * radius);
    const ConvexBody ball = ConvexBody::ball(n, 2.0 * radius, center);

    // Nesting: the new search ball must sit inside the previous stage's
    // (the center moved by at most 2 r_{t-1} and radii contract).
    if (stage > 1 && radius > prev_radius * (1.0 + 1e-12)) {
      result.failed = true;
      result.note = "stage radius failed to contract";
      return result;
    }
    if (!ball_inside(enclosing, center, 2.0 * radius)) {
      result.failed = true;
      result.note = "stage ball left the enclosing body";
      return result;
    }

    const double quad_range = 0.5 * model.alpha * (2.0 * radius) * (2.0 * radius);
    const double inner_eps =
        std::max(n * rho_t, options.inner_epsilon_floor_frac * quad_range);

    AnnealingPlan plan;
    try {
      plan = make_plan(n, inner_eps, ball, rho_t, options.inner);
    } catch (const Error& e) {
      result.failed = true;
      result.note = std::string("stage plan failed: ") + e.what();
      return result;
    }
    ObjectiveOracle oracle(F, rho_t);
    AnnealResult inner =
        anneal(oracle, ball, plan,
               hash_combine(options.seed, static_cast<std::uint64_t>(stage)),
               options.threads);
    result.total_queries += inner.total_queries;

    StageRecord record;
    record.stage = stage;
    record.center = center;
    record.radius = radius;
    record.rho = rho_t;
    record.inner_best = inner.best_value;
    record.queries = inner.total_queries;
    result.stage_log.push_back(record);

    if (inner.failed) {
      result.failed = true;
      std::ostringstream os;
      os << "inner annealing failed at stage " << stage << ": "
         << inner.failure;
      result.note = os.str();
      return result;
    }

    if (inner.best_value < result.best_value) {
      result.best_value = inner.best_value;
      result.x_final = inner.best_point;
    }
    center = inner.best_point;

    const double r_next = next_radius(model, n, radius);
    prev_radius = radius;
    if (r_next >= radius / (1.0 + options.eps_rel)) {
      result.note = "stopped: radius stagnated";
      return result;
    }
    if (r_next <= (1.0 + options.eps_rel) * r_star) {
      result.note = "stopped: reached the critical radius";
      return result;
    }
    radius = r_next;
  }
  result.note = "stopped: stage cap reached";
  return result;
}

}  // namespace annealopt
