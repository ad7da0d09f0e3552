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

#include "annealopt/geometry.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <utility>

namespace annealopt {

namespace {

bool all_finite(const Vector& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) return false;
  }
  return true;
}

}  // namespace

ConvexBody::ConvexBody(int dim, Membership membership, double inner_radius,
                       double outer_radius, Vector interior_point,
                       std::string description)
    : dim_(dim),
      membership_(std::move(membership)),
      r_(inner_radius),
      R_(outer_radius),
      interior_point_(std::move(interior_point)),
      description_(std::move(description)) {
  if (dim_ < 1) throw InvalidInputError("body dimension must be >= 1");
  if (!(r_ > 0.0) || !(R_ >= r_))
    throw InvalidInputError("body radii must satisfy 0 < r <= R");
  if (interior_point_.size() != dim_)
    throw InvalidInputError("interior point dimension mismatch");
  if (!membership_(interior_point_))
    throw InvalidInputError("interior point fails the membership oracle");
}

bool ConvexBody::contains(const Vector& x) const {
  if (x.size() != dim_)
    throw InvalidInputError("membership query dimension mismatch");
  if (!all_finite(x))
    throw InvalidInputError("membership query has non-finite coordinates");
  return membership_(x);
}

bool ConvexBody::well_rounded(double factor) const {
  return R_ / r_ <= factor * std::sqrt(static_cast<double>(dim_));
}

ConvexBody ConvexBody::ball(int dim, double radius, Vector center) {
  if (center.size() == 0) center = Vector::Zero(dim);
  if (!(radius > 0.0)) throw InvalidInputError("ball radius must be > 0");
  if (center.size() != dim)
    throw InvalidInputError("ball center dimension mismatch");
  const double r2 = radius * radius;
  Vector c = center;
  auto member = [c, r2](const Vector& x) {
    return (x - c).squaredNorm() <= r2 * (1.0 + 1e-14);
  };
  const double R = radius + center.norm();
  return ConvexBody(dim, member, radius, R, center, "ball");
}

ConvexBody ConvexBody::box(Vector lo, Vector hi) {
  if (lo.size() != hi.size() || lo.size() == 0)
    throw InvalidInputError("box bounds dimension mismatch");
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (!(lo[i] < hi[i]))
      throw InvalidInputError("box requires lo < hi per coordinate");
  }
  const int dim = static_cast<int>(lo.size());
  Vector center = 0.5 * (lo + hi);
  auto member = [lo, hi](const Vector& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (x[i] < lo[i] || x[i] > hi[i]) return false;
    }
    return true;
  };
  const double r = 0.5 * (hi - lo).minCoeff();
  const double R = std::max(lo.norm(), hi.norm());
  return ConvexBody(dim, member, r, R, center, "box");
}

ConvexBody ConvexBody::polytope(Matrix A, Vector b, Vector interior_point,
                                double outer_radius) {
  if (A.rows() != b.size() || A.cols() != interior_point.size())
    throw InvalidInputError("polytope dimensions mismatch");
  const int dim = static_cast<int>(A.cols());
  double r = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    const double norm = A.row(i).norm();
    if (!(norm > 0.0)) throw InvalidInputError("polytope has a zero row");
    const double slack = (b[i] - A.row(i).dot(interior_point)) / norm;
    r = std::min(r, slack);
  }
  if (!(r > 0.0))
    throw InvalidInputError("interior point is not strictly inside polytope");
  Matrix Ac = std::move(A);
  Vector bc = std::move(b);
  auto member = [Ac, bc](const Vector& x) {
    return ((Ac * x - bc).array() <= 1e-12).all();
  };
  return ConvexBody(dim, member, r, outer_radius, std::move(interior_point),
                    "polytope");
}

RoundingMap::RoundingMap(Matrix sigma, int provenance, double condition_cap)
    : sigma_(std::move(sigma)), provenance_(provenance) {
  if (sigma_.rows() != sigma_.cols() || sigma_.rows() == 0)
    throw InvalidInputError("rounding map must be square");
  Eigen::JacobiSVD<Matrix> svd(sigma_);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (!(smin > 0.0) || smax / smin > condition_cap)
    throw GeometryError("rounding map is singular or ill-conditioned");
}

RoundingMap RoundingMap::identity(int dim) {
  return RoundingMap(Matrix::Identity(dim, dim), 0);
}

RoundingMap RoundingMap::inverse() const {
  Matrix inv = sigma_.partialPivLu().inverse();
  return RoundingMap(std::move(inv), provenance_);
}

bool contains(const ConvexBody& body, const Vector& x) {
  return body.contains(x);
}

namespace {

// Largest certified-inside offset along +u, with an outside witness within
// tol beyond it.
double boundary_offset(const ConvexBody& body, const Vector& x,
                       const Vector& u, double tol) {
  const double cap = 4.0 * body.outer_radius();
  const int max_iters =
      static_cast<int>(std::ceil(std::log2(cap / tol))) + 64;

  double inside = 0.0;
  double probe = tol;
  int iters = 0;
  while (body.contains(x + probe * u)) {
    inside = probe;
    probe *= 2.0;
    if (probe > cap)
      throw GeometryError(
          "membership oracle inconsistent with outer radius (no boundary "
          "found along the line)");
    if (++iters > max_iters)
      throw GeometryError("chord search exceeded iteration cap");
  }
  // Invariant: inside is in K, probe is not.
  iters = 0;
  while (probe - inside > tol) {
    const double mid = 0.5 * (inside + probe);
    if (body.contains(x + mid * u)) {
      inside = mid;
    } else {
      probe = mid;
    }
    if (++iters > max_iters)
      throw GeometryError("chord bisection exceeded iteration cap");
  }
  return inside;
}

}  // namespace

Chord find_chord(const ConvexBody& body, const Vector& x, const Vector& u,
                 double tol) {
  if (!(tol > 0.0)) throw InvalidInputError("chord tolerance must be > 0");
  if (std::abs(u.norm() - 1.0) > 1e-12)
    throw InvalidInputError("chord direction must be a unit vector");
  if (!body.contains(x))
    throw InvalidInputError("chord origin is outside the body");

  Chord chord;
  chord.origin = x;
  chord.direction = u;
  chord.boundary_tolerance = tol;
  chord.hi = boundary_offset(body, x, u, tol);
  chord.lo = -boundary_offset(body, x, -u, tol);
  if (!(chord.lo < 0.0) || !(chord.hi > 0.0))
    throw GeometryError(
        "chord origin is within tolerance of the boundary; no interior "
        "chord exists");
  return chord;
}

Vector sample_direction(const RoundingMap& map, Rng& rng) {
  const Vector g = rng.normal_vector(map.dim());
  Vector d = map.matrix() * g;
  const double norm = d.norm();
  if (!(norm > 1e-300))
    throw GeometryError("direction normalization underflow (degenerate map)");
  return d / norm;
}

}  // namespace annealopt
