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

#include <algorithm>
#include <cmath>
#include <limits>

namespace annealopt {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double trap_coeff_1d(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

}  // namespace

double GridDensity::x_at(int ix) const {
  return lo_x + spacing_x() * ix;
}

double GridDensity::y_at(int iy) const {
  return ny > 1 ? lo_y + spacing_y() * iy : 0.0;
}

GridDensity quadrature_density(const std::function<double(double)>& log_g,
                               double lo, double hi, int points) {
  if (points < 100) throw InvalidInputError("need at least 100 grid points");
  if (!(hi > lo)) throw InvalidInputError("empty quadrature domain");
  GridDensity d;
  d.dim = 1;
  d.nx = points;
  d.lo_x = lo;
  d.hi_x = hi;
  d.weights.resize(points);

  double max_log = kNegInf;
  Eigen::VectorXd logs(points);
  for (int i = 0; i < points; ++i) {
    logs[i] = log_g(d.x_at(i));
    max_log = std::max(max_log, logs[i]);
  }
  if (std::isinf(max_log))
    throw InvalidInputError("quadrature target has no mass (all -inf)");
  double total = 0.0;
  for (int i = 0; i < points; ++i) {
    const double w = trap_coeff_1d(i, points) * std::exp(logs[i] - max_log);
    d.weights[i] = w;
    total += w;
  }
  d.weights /= total;
  return d;
}

GridDensity quadrature_density_2d(
    const std::function<double(const Vector&)>& log_g, const Vector& lo,
    const Vector& hi, int points_per_dim) {
  if (lo.size() != 2 || hi.size() != 2)
    throw InvalidInputError("2-D quadrature needs 2-vector bounds");
  if (points_per_dim < 100)
    throw InvalidInputError("need at least 100 grid points per dimension");
  GridDensity d;
  d.dim = 2;
  d.nx = points_per_dim;
  d.ny = points_per_dim;
  d.lo_x = lo[0];
  d.hi_x = hi[0];
  d.lo_y = lo[1];
  d.hi_y = hi[1];
  d.weights.resize(d.nx * d.ny);

  double max_log = kNegInf;
  Eigen::VectorXd logs(d.nx * d.ny);
  Vector x(2);
  for (int ix = 0; ix < d.nx; ++ix) {
    x[0] = d.x_at(ix);
    for (int iy = 0; iy < d.ny; ++iy) {
      x[1] = d.y_at(iy);
      const double v = log_g(x);
      logs[ix * d.ny + iy] = v;
      max_log = std::max(max_log, v);
    }
  }
  if (std::isinf(max_log))
    throw InvalidInputError("quadrature target has no mass (all -inf)");
  double total = 0.0;
  for (int ix = 0; ix < d.nx; ++ix) {
    for (int iy = 0; iy < d.ny; ++iy) {
      const double w = trap_coeff_1d(ix, d.nx) * trap_coeff_1d(iy, d.ny) *
                       std::exp(logs[ix * d.ny + iy] - max_log);
      d.weights[ix * d.ny + iy] = w;
      total += w;
    }
  }
  d.weights /= total;
  return d;
}

double tv_distance(const GridDensity& p, const GridDensity& q) {
  const bool same = p.dim == q.dim && p.nx == q.nx && p.ny == q.ny &&
                    std::abs(p.lo_x - q.lo_x) < 1e-12 &&
                    std::abs(p.hi_x - q.hi_x) < 1e-12 &&
                    std::abs(p.lo_y - q.lo_y) < 1e-12 &&
                    std::abs(p.hi_y - q.hi_y) < 1e-12;
  if (!same) throw InvalidInputError("tv_distance requires identical grids");
  return 0.5 * (p.weights - q.weights).cwiseAbs().sum();
}

double grid_mean_1d(const GridDensity& density) {
  if (density.dim != 1) throw InvalidInputError("grid_mean_1d needs 1-D grid");
  double mean = 0.0;
  for (int i = 0; i < density.nx; ++i)
    mean += density.weights[i] * density.x_at(i);
  return mean;
}

double grid_expectation(const GridDensity& density,
                        const std::function<double(const Vector&)>& fn) {
  double mean = 0.0;
  Vector x(density.dim);
  for (int ix = 0; ix < density.nx; ++ix) {
    x[0] = density.x_at(ix);
    for (int iy = 0; iy < density.ny; ++iy) {
      if (density.dim == 2) x[1] = density.y_at(iy);
      mean += density.weights[ix * density.ny + iy] * fn(x);
    }
  }
  return mean;
}

Eigen::VectorXd aggregate_bins(const GridDensity& density, int bins_x,
                               int bins_y) {
  if (bins_x < 1 || bins_y < 1) throw InvalidInputError("need >= 1 bin");
  Eigen::VectorXd bins = Eigen::VectorXd::Zero(bins_x * bins_y);
  const double wx = (density.hi_x - density.lo_x);
  const double wy = (density.hi_y - density.lo_y);
  for (int ix = 0; ix < density.nx; ++ix) {
    int bx = static_cast<int>((density.x_at(ix) - density.lo_x) / wx * bins_x);
    bx = std::clamp(bx, 0, bins_x - 1);
    for (int iy = 0; iy < density.ny; ++iy) {
      int by = 0;
      if (density.dim == 2) {
        by = static_cast<int>((density.y_at(iy) - density.lo_y) / wy * bins_y);
        by = std::clamp(by, 0, bins_y - 1);
      }
      bins[bx * bins_y + by] += density.weights[ix * density.ny + iy];
    }
  }
  return bins;
}

double binned_tv_1d(const GridDensity& density,
                    const std::vector<double>& samples, int bins) {
  const Eigen::VectorXd expected = aggregate_bins(density, bins, 1);
  Eigen::VectorXd observed = Eigen::VectorXd::Zero(bins);
  const double w = density.hi_x - density.lo_x;
  for (double s : samples) {
    int b = static_cast<int>((s - density.lo_x) / w * bins);
    b = std::clamp(b, 0, bins - 1);
    observed[b] += 1.0;
  }
  observed /= static_cast<double>(samples.size());
  return 0.5 * (expected - observed).cwiseAbs().sum();
}

double binned_tv_2d(const GridDensity& density,
                    const std::vector<Vector>& samples, int bins_x,
                    int bins_y) {
  const Eigen::VectorXd expected = aggregate_bins(density, bins_x, bins_y);
  Eigen::VectorXd observed = Eigen::VectorXd::Zero(bins_x * bins_y);
  const double wx = density.hi_x - density.lo_x;
  const double wy = density.hi_y - density.lo_y;
  for (const Vector& s : samples) {
    int bx = static_cast<int>((s[0] - density.lo_x) / wx * bins_x);
    int by = static_cast<int>((s[1] - density.lo_y) / wy * bins_y);
    bx = std::clamp(bx, 0, bins_x - 1);
    by = std::clamp(by, 0, bins_y - 1);
    observed[bx * bins_y + by] += 1.0;
  }
  observed /= static_cast<double>(samples.size());
  return 0.5 * (expected - observed).cwiseAbs().sum();
}

namespace {

// Bounding window (in each dimension) of the region where a * F is within
// `width` of its minimum, measured on a coarse scan and inflated by two
// coarse cells.  Keeps the trapezoid rule resolved when exp(-a F)
// concentrates at low temperature.
void mass_window(const std::function<double(const Vector&)>& F,
                 const Vector& lo, const Vector& hi, double a, double width,
                 Vector* win_lo, Vector* win_hi) {
  const int dim = static_cast<int>(lo.size());
  const int coarse = dim == 1 ? 4097 : 257;
  *win_lo = lo;
  *win_hi = hi;
  if (a == 0.0) return;

  Vector x(dim);
  double min_af = std::numeric_limits<double>::infinity();
  std::vector<double> vals;
  const int total = dim == 1 ? coarse : coarse * coarse;
  vals.reserve(total);
  for (int ix = 0; ix < coarse; ++ix) {
    x[0] = lo[0] + (hi[0] - lo[0]) * ix / (coarse - 1);
    if (dim == 1) {
      const double v = a * F(x);
      vals.push_back(v);
      min_af = std::min(min_af, v);
    } else {
      for (int iy = 0; iy < coarse; ++iy) {
        x[1] = lo[1] + (hi[1] - lo[1]) * iy / (coarse - 1);
        const double v = a * F(x);
        vals.push_back(v);
        min_af = std::min(min_af, v);
      }
    }
  }
  Vector keep_lo = hi;
  Vector keep_hi = lo;
  int k = 0;
  for (int ix = 0; ix < coarse; ++ix) {
    const double cx = lo[0] + (hi[0] - lo[0]) * ix / (coarse - 1);
    const int inner = dim == 1 ? 1 : coarse;
    for (int iy = 0; iy < inner; ++iy, ++k) {
      if (vals[k] > min_af + width) continue;
      keep_lo[0] = std::min(keep_lo[0], cx);
      keep_hi[0] = std::max(keep_hi[0], cx);
      if (dim == 2) {
        const double cy = lo[1] + (hi[1] - lo[1]) * iy / (coarse - 1);
        keep_lo[1] = std::min(keep_lo[1], cy);
        keep_hi[1] = std::max(keep_hi[1], cy);
      }
    }
  }
  for (int d = 0; d < dim; ++d) {
    const double cell = 2.0 * (hi[d] - lo[d]) / (coarse - 1);
    (*win_lo)[d] = std::max(lo[d], keep_lo[d] - cell);
    (*win_hi)[d] = std::min(hi[d], keep_hi[d] + cell);
    if (!((*win_hi)[d] > (*win_lo)[d])) {
      (*win_lo)[d] = lo[d];
      (*win_hi)[d] = hi[d];
    }
  }
}

}  // namespace

double log_partition(const std::function<double(const Vector&)>& F,
                     const Vector& lo, const Vector& hi, double a,
                     int points_per_dim) {
  const int dim = static_cast<int>(lo.size());
  if (dim < 1 || dim > 2)
    throw InvalidInputError("log_partition supports dimensions 1 and 2 only");
  if (points_per_dim < 100)
    throw InvalidInputError("need at least 100 points per dimension");

  Vector win_lo, win_hi;
  mass_window(F, lo, hi, a, 60.0, &win_lo, &win_hi);

  const int nx = points_per_dim;
  const int ny = dim == 2 ? points_per_dim : 1;
  const double hx = (win_hi[0] - win_lo[0]) / (nx - 1);
  const double hy = dim == 2 ? (win_hi[1] - win_lo[1]) / (ny - 1) : 1.0;

  double max_v = kNegInf;
  std::vector<double> vals(static_cast<size_t>(nx) * ny);
  Vector x(dim);
  for (int ix = 0; ix < nx; ++ix) {
    x[0] = win_lo[0] + hx * ix;
    for (int iy = 0; iy < ny; ++iy) {
      if (dim == 2) x[1] = win_lo[1] + hy * iy;
      const double v = -a * F(x);
      vals[static_cast<size_t>(ix) * ny + iy] = v;
      max_v = std::max(max_v, v);
    }
  }
  if (std::isinf(max_v))
    throw PrecisionError("partition integrand is identically zero");
  double total = 0.0;
  for (int ix = 0; ix < nx; ++ix) {
    for (int iy = 0; iy < ny; ++iy) {
      double c = trap_coeff_1d(ix, nx);
      if (dim == 2) c *= trap_coeff_1d(iy, ny);
      total += c * std::exp(vals[static_cast<size_t>(ix) * ny + iy] - max_v);
    }
  }
  if (!(total > 0.0))
    throw PrecisionError("partition quadrature underflowed");
  const double cell = dim == 2 ? hx * hy : hx;
  return max_v + std::log(total) + std::log(cell);
}

WarmStartNorm warm_start_norm(const std::function<double(const Vector&)>& F,
                              double T_i, double T_next, const Vector& lo,
                              const Vector& hi, int points_per_dim) {
  if (!(T_i > 0.0) || !(T_next > 0.0))
    throw InvalidInputError("temperatures must be > 0");
  const double a = 2.0 / T_i - 1.0 / T_next;
  const double b = 1.0 / T_next;
  const double c = 1.0 / T_i;
  WarmStartNorm out;
  out.log_ratio = log_partition(F, lo, hi, a, points_per_dim) +
                  log_partition(F, lo, hi, b, points_per_dim) -
                  2.0 * log_partition(F, lo, hi, c, points_per_dim);
  out.ratio = std::exp(out.log_ratio);
  return out;
}

GibbsGap gibbs_mean_gap(const std::function<double(const Vector&)>& f,
                        const std::function<double(const Vector&)>& F,
                        double T, const Vector& lo, const Vector& hi,
                        int points_per_dim) {
  if (!(T > 0.0)) throw InvalidInputError("temperature must be > 0");
  const int dim = static_cast<int>(lo.size());
  if (dim < 1 || dim > 2)
    throw InvalidInputError("gibbs_mean_gap supports dimensions 1 and 2");

  // min f and rho = max |F - f| over the full-domain grid.
  double min_f = std::numeric_limits<double>::infinity();
  double rho = 0.0;
  {
    const int nx = points_per_dim;
    const int ny = dim == 2 ? points_per_dim : 1;
    Vector x(dim);
    for (int ix = 0; ix < nx; ++ix) {
      x[0] = lo[0] + (hi[0] - lo[0]) * ix / (nx - 1);
      for (int iy = 0; iy < ny; ++iy) {
        if (dim == 2) x[1] = lo[1] + (hi[1] - lo[1]) * iy / (ny - 1);
        const double fv = f(x);
        min_f = std::min(min_f, fv);
        rho = std::max(rho, std::abs(F(x) - fv));
      }
    }
  }

  // E f under exp(-F/T) on the mass window.
  const double a = 1.0 / T;
  Vector win_lo, win_hi;
  mass_window(F, lo, hi, a, 60.0, &win_lo, &win_hi);
  const int nx = points_per_dim;
  const int ny = dim == 2 ? points_per_dim : 1;
  const double hx = (win_hi[0] - win_lo[0]) / (nx - 1);
  const double hy = dim == 2 ? (win_hi[1] - win_lo[1]) / (ny - 1) : 1.0;

  double max_v = kNegInf;
  std::vector<double> vals(static_cast<size_t>(nx) * ny);
  Vector x(dim);
  for (int ix = 0; ix < nx; ++ix) {
    x[0] = win_lo[0] + hx * ix;
    for (int iy = 0; iy < ny; ++iy) {
      if (dim == 2) x[1] = win_lo[1] + hy * iy;
      const double v = -a * F(x);
      vals[static_cast<size_t>(ix) * ny + iy] = v;
      max_v = std::max(max_v, v);
    }
  }
  double z = 0.0;
  double ef = 0.0;
  for (int ix = 0; ix < nx; ++ix) {
    x[0] = win_lo[0] + hx * ix;
    for (int iy = 0; iy < ny; ++iy) {
      if (dim == 2) x[1] = win_lo[1] + hy * iy;
      double coeff = trap_coeff_1d(ix, nx);
      if (dim == 2) coeff *= trap_coeff_1d(iy, ny);
      const double w =
          coeff * std::exp(vals[static_cast<size_t>(ix) * ny + iy] - max_v);
      z += w;
      ef += w * f(x);
      min_f = std::min(min_f, f(x));
    }
  }
  if (!(z > 0.0)) throw PrecisionError("Gibbs quadrature underflowed");

  GibbsGap out;
  out.rho = rho;
  out.gap = ef / z - min_f;
  out.bound = (dim + 1) * T * std::exp(2.0 * rho / T);
  return out;
}

BetaCertificate certify_beta_log_concave(
    const std::function<double(const Vector&)>& log_g, const Vector& lo,
    const Vector& hi, double beta, std::int64_t trials, Rng& rng) {
  if (trials < 1000)
    throw InvalidInputError("certification needs at least 1000 trials");
  const int dim = static_cast<int>(lo.size());
  BetaCertificate cert;
  cert.worst_violation = -std::numeric_limits<double>::infinity();
  Vector x(dim), y(dim), mid(dim);
  for (std::int64_t t = 0; t < trials; ++t) {
    for (int d = 0; d < dim; ++d) {
      x[d] = rng.uniform(lo[d], hi[d]);
      y[d] = rng.uniform(lo[d], hi[d]);
    }
    const double alpha = rng.uniform();
    mid = alpha * x + (1.0 - alpha) * y;
    const double rhs =
        -beta + alpha * log_g(x) + (1.0 - alpha) * log_g(y) - 1e-12;
    if (std::isinf(rhs) && rhs < 0) continue;
    const double lhs = log_g(mid);
    const double violation = rhs - lhs;
    cert.worst_violation = std::max(cert.worst_violation, violation);
    if (violation > 0.0) cert.pass = false;
  }
  if (std::isinf(cert.worst_violation)) cert.worst_violation = 0.0;
  return cert;
}

}  // namespace annealopt
