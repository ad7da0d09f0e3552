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

#ifndef ANNEALOPT_ZEROTH_ORDER_HPP_
#define ANNEALOPT_ZEROTH_ORDER_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "annealopt/objective.hpp"
#include "annealopt/types.hpp"

namespace annealopt {

// Grid-snapped noisy oracle: queries snap to an l-infinity net of pitch
// alpha covering the box of radius box_radius; each net cell carries one
// fixed Gaussian noise value of standard deviation sigma / sqrt(tau),
// generated on demand from (master_seed, cell index).  A call is billed as
// tau underlying oracle queries.
struct StochasticOracleConfig {
  double sigma = 1.0;
  double alpha = 0.0;
  std::int64_t tau = 1;
  std::uint64_t master_seed = 0;
  double box_radius = 1.0;
  double declared_rho = 0.0;  // sup |F - f| claimed for the wrapped oracle
};

// Grid coordinates of a snapped point (snapped point = alpha * index).
struct GridCell {
  std::vector<std::int64_t> index;

  bool operator==(const GridCell& other) const { return index == other.index; }
};

// Per-coordinate nearest multiple of alpha, exact ties rounded toward
// minus infinity.
GridCell grid_snap(const Vector& x, double alpha);

Vector cell_point(const GridCell& cell, double alpha);

// Deterministic N(0,1) value keyed on (seed, cell).
double cell_noise(std::uint64_t seed, const GridCell& cell);

// One oracle call: f at the snapped point plus the cell's frozen noise.
// Throws DomainError when x falls outside the gridded box.
double stochastic_query(const std::function<double(const Vector&)>& f,
                        const StochasticOracleConfig& cfg, const Vector& x);

struct StochasticParams {
  std::int64_t tau = 1;
  double alpha = 0.0;
};

// Solves epsilon/(2n) = sigma sqrt((2n log(R/alpha) + 2 log(1/delta))/tau)
//                     = alpha L
// for (tau, alpha):  alpha = epsilon/(2 L n),
// tau = ceil(sigma^2 n^2 (8 n log(R/alpha) + 8 log(1/delta)) / epsilon^2).
StochasticParams stochastic_params(int n, double epsilon, double sigma,
                                   double L, double R, double delta);

// Convenience constructor combining stochastic_params with the declared
// non-convexity bound rho = epsilon / n.
StochasticOracleConfig make_stochastic_config(int n, double epsilon,
                                              double sigma, double L, double R,
                                              double delta,
                                              std::uint64_t master_seed);

// Objective oracle backed by the grid-snapped noisy oracle.  Valid (with
// probability 1 - delta over the frozen noise) as an approximately convex
// objective with |F - f| <= declared_rho; each evaluation bills tau queries.
ObjectiveOracle wrap_as_approx_convex(std::function<double(const Vector&)> f,
                                      const StochasticOracleConfig& cfg);

}  // namespace annealopt

#endif  // ANNEALOPT_ZEROTH_ORDER_HPP_
