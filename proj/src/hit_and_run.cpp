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

#include "annealopt/hit_and_run.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace annealopt {

void WalkStats::merge(const WalkStats& o) {
  oracle_queries += o.oracle_queries;
  attempts += o.attempts;
  steps += o.steps;
  min_step_acceptance = std::min(min_step_acceptance, o.min_step_acceptance);
}

Vector step(const LogTarget& g, const ConvexBody& body, const Vector& x,
            const WalkParams& params, Rng& rng, WalkStats* stats,
            double* log_density_out) {
  if (!body.contains(x))
    throw InvalidInputError("walk point is outside the body");

  Vector u;
  if (params.rounding.has_value()) {
    u = sample_direction(*params.rounding, rng);
  } else {
    Vector d = rng.normal_vector(body.dim());
    const double norm = d.norm();
    if (!(norm > 1e-300)) throw GeometryError("direction underflow");
    u = d / norm;
  }

  const Chord chord = find_chord(body, x, u, body.boundary_tolerance());

  ChordFunction restricted;
  restricted.beta = g.beta;
  restricted.lo = chord.lo;
  restricted.hi = chord.hi;
  std::int64_t evals = 0;
  restricted.log_value = [&](double t) {
    ++evals;
    return g.log_density(chord.point_at(t));
  };

  const ChordSample cs = sample_chord(restricted, params.sampler, rng);
  if (stats != nullptr) {
    stats->oracle_queries += evals;
    stats->attempts += cs.attempts;
    stats->steps += 1;
    if (cs.attempts > 0) {
      stats->min_step_acceptance =
          std::min(stats->min_step_acceptance, 1.0 / cs.attempts);
    }
  }
  if (log_density_out != nullptr) *log_density_out = cs.log_value;
  return chord.point_at(cs.offset);
}

WalkResult walk(const LogTarget& g, const ConvexBody& body, const Vector& x0,
                const WalkParams& params, Rng& rng) {
  if (params.steps < 1) throw InvalidInputError("walk requires steps >= 1");
  WalkResult result;
  result.final_point = x0;
  if (params.record_trace) result.trace.reserve(params.steps);

  for (std::int64_t i = 0; i < params.steps; ++i) {
    try {
      result.final_point =
          step(g, body, result.final_point, params, rng, &result.stats,
               &result.final_log_density);
    } catch (const Error& e) {
      std::ostringstream os;
      os << "walk failed at step " << i << ": " << e.what();
      throw SamplerError(os.str());
    }
    if (params.check_membership && !body.contains(result.final_point))
      throw GeometryError("walk iterate left the body");
    if (params.record_trace) {
      result.trace.push_back(result.final_point);
      result.trace_log_density.push_back(result.final_log_density);
      result.trace_queries.push_back(result.stats.oracle_queries);
    }
  }
  return result;
}

double mixing_steps_value(int n, double R, double r, double beta, double M,
                          double gamma, double C) {
  if (n < 1) throw InvalidInputError("dimension must be >= 1");
  if (!(r > 0.0) || !(R >= r))
    throw InvalidInputError("radii must satisfy 0 < r <= R");
  if (beta < 0.0) throw InvalidInputError("beta must be >= 0");
  if (!(M > 0.0)) throw InvalidInputError("warm-start norm must be > 0");
  if (!(gamma > 0.0) || !(gamma < 0.5))
    throw InvalidInputError("gamma must lie in (0, 1/2)");
  if (!(C > 0.0)) throw InvalidInputError("C must be > 0");
  if (!(M > gamma))
    throw InvalidInputError("warm-start norm must exceed gamma");

  const double nd = static_cast<double>(n);
  const double log_inner =
      std::log(std::exp(beta) * M * nd * R / (r * gamma * gamma));
  if (!(log_inner > 0.0))
    throw InvalidInputError("mixing-step log argument must exceed 1");
  const double log4 = std::pow(log_inner, 4);
  return C * nd * nd * std::exp(6.0 * beta) * (R / r) * (R / r) * log4 *
         std::log(M / gamma);
}

std::int64_t mixing_steps(int n, double R, double r, double beta, double M,
                          double gamma, double C) {
  const double value = mixing_steps_value(n, R, r, beta, M, gamma, C);
  const double ceiled = std::ceil(value);
  if (ceiled >= 9.2e18) return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(ceiled);
}

double sampler_precision(double gamma, double beta, std::int64_t m) {
  if (!(gamma > 0.0)) throw InvalidInputError("gamma must be > 0");
  if (beta < 0.0) throw InvalidInputError("beta must be >= 0");
  if (m < 1) throw InvalidInputError("step count must be >= 1");
  return gamma * std::exp(-2.0 * beta) / (12.0 * static_cast<double>(m));
}

}  // namespace annealopt
