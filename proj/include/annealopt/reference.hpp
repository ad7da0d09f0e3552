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

#ifndef ANNEALOPT_REFERENCE_HPP_
#define ANNEALOPT_REFERENCE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "annealopt/rng.hpp"
#include "annealopt/types.hpp"

namespace annealopt {

// Normalized trapezoid-rule density on a uniform 1-D or 2-D lattice.
// Weights are non-negative and sum to 1.
struct GridDensity {
  int dim = 1;
  int nx = 0, ny = 1;
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;

  // Row-major (ix * ny + iy).
  Eigen::VectorXd weights;

  double x_at(int ix) const;
  double y_at(int iy) const;
  double spacing_x() const { return (hi_x - lo_x) / (nx - 1); }
  double spacing_y() const { return ny > 1 ? (hi_y - lo_y) / (ny - 1) : 0.0; }
};

// Trapezoid-normalized density from a log target, computed in log space
// with max subtraction.  Throws on all -inf input.
GridDensity quadrature_density(const std::function<double(double)>& log_g,
                               double lo, double hi, int points);
GridDensity quadrature_density_2d(
    const std::function<double(const Vector&)>& log_g, const Vector& lo,
    const Vector& hi, int points_per_dim);

// Half L1 distance between densities on identical grids.
double tv_distance(const GridDensity& p, const GridDensity& q);

// Expectations against the grid density.
double grid_mean_1d(const GridDensity& density);
double grid_expectation(const GridDensity& density,
                        const std::function<double(const Vector&)>& fn);

// Aggregate grid weights into bins_x * bins_y uniform bins over the domain.
Eigen::VectorXd aggregate_bins(const GridDensity& density, int bins_x,
                               int bins_y);

// Binned total variation between samples and the grid density, on a uniform
// bin partition of the density's domain.
double binned_tv_1d(const GridDensity& density,
                    const std::vector<double>& samples, int bins);
double binned_tv_2d(const GridDensity& density,
                    const std::vector<Vector>& samples, int bins_x,
                    int bins_y);

// log of the partition integral Y(a) = int exp(-a F) over the box,
// trapezoid rule on a window adapted to where the integrand carries mass
// (dimension 1 or 2 only).
double log_partition(const std::function<double(const Vector&)>& F,
                     const Vector& lo, const Vector& hi, double a,
                     int points_per_dim = 1500);

struct WarmStartNorm {
  double ratio = 0.0;      // may overflow to inf at extreme temperatures
  double log_ratio = 0.0;  // always finite
};

// L2 norm of mu_i against mu_{i+1} for the tempered family
// exp(-F/T):  Y(2/T_i - 1/T_{i+1}) Y(1/T_{i+1}) / Y(1/T_i)^2.
WarmStartNorm warm_start_norm(const std::function<double(const Vector&)>& F,
                              double T_i, double T_next, const Vector& lo,
                              const Vector& hi, int points_per_dim = 1500);

struct GibbsGap {
  double gap = 0.0;    // quadrature E_{exp(-F/T)} f - min_grid f
  double bound = 0.0;  // (n+1) T exp(2 rho / T)
  double rho = 0.0;    // max |F - f| over the grid
};

GibbsGap gibbs_mean_gap(const std::function<double(const Vector&)>& f,
                        const std::function<double(const Vector&)>& F,
                        double T, const Vector& lo, const Vector& hi,
                        int points_per_dim = 1001);

struct BetaCertificate {
  bool pass = true;
  // Largest violation of the beta-log-concavity inequality over the
  // sampled triples; <= 0 means no violation was found.
  double worst_violation = 0.0;
};

// Randomized check of
// log g(ax + (1-a)y) >= -beta + a log g(x) + (1-a) log g(y).
BetaCertificate certify_beta_log_concave(
    const std::function<double(const Vector&)>& log_g, const Vector& lo,
    const Vector& hi, double beta, std::int64_t trials, Rng& rng);

}  // namespace annealopt

#endif  // ANNEALOPT_REFERENCE_HPP_
