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

#ifndef ANNEALOPT_GEOMETRY_HPP_
#define ANNEALOPT_GEOMETRY_HPP_

#include <functional>
#include <string>

#include "annealopt/rng.hpp"
#include "annealopt/types.hpp"

namespace annealopt {

// A convex body K given by a membership oracle plus radius metadata:
// B(r) centered at interior_point is contained in K, and K is contained in
// B(R) around the origin.  Bodies are closed: membership on the boundary
// returns true.  Immutable after construction and safe to share across
// threads.
class ConvexBody {
 public:
  using Membership = std::function<bool(const Vector&)>;

  ConvexBody(int dim, Membership membership, double inner_radius,
             double outer_radius, Vector interior_point,
             std::string description = "");

  // Membership with input validation (non-finite coordinates rejected).
  bool contains(const Vector& x) const;

  int dim() const { return dim_; }
  double inner_radius() const { return r_; }
  double outer_radius() const { return R_; }
  const Vector& interior_point() const { return interior_point_; }
  const std::string& description() const { return description_; }

  // R/r <= factor * sqrt(n).
  bool well_rounded(double factor = 2.0) const;

  // Default tolerance used when extracting chords: 1e-9 * R.
  double boundary_tolerance() const { return 1e-9 * R_; }

  static ConvexBody ball(int dim, double radius, Vector center = Vector());
  static ConvexBody box(Vector lo, Vector hi);
  // {x : A x <= b}.  The inner radius is certified from the interior point:
  // r = min_i (b_i - a_i . x0) / |a_i|.  The caller supplies the outer
  // radius (boundedness is not checkable through the oracle).
  static ConvexBody polytope(Matrix A, Vector b, Vector interior_point,
                             double outer_radius);

 private:
  int dim_;
  Membership membership_;
  double r_;
  double R_;
  Vector interior_point_;
  std::string description_;
};

// Intersection of the line {origin + t * direction} with K, bracketed to
// boundary_tolerance: lo < 0 < hi, offsets lo + tol / hi - tol are inside
// and lo - tol / hi + tol are outside.
struct Chord {
  Vector origin;
  Vector direction;
  double lo = 0.0;
  double hi = 0.0;
  double boundary_tolerance = 0.0;

  Vector point_at(double t) const { return origin + t * direction; }
  double length() const { return hi - lo; }
};

// Invertible linear transform applied to direction sampling.  Epoch 0 uses
// the identity; later epochs accumulate whitening factors.
class RoundingMap {
 public:
  explicit RoundingMap(Matrix sigma, int provenance = 0,
                       double condition_cap = 1e12);

  static RoundingMap identity(int dim);

  const Matrix& matrix() const { return sigma_; }
  int provenance() const { return provenance_; }
  int dim() const { return static_cast<int>(sigma_.rows()); }

  RoundingMap inverse() const;
  Vector apply(const Vector& x) const { return sigma_ * x; }

 private:
  Matrix sigma_;
  int provenance_;
};

// True iff x is in K.  Throws InvalidInputError on non-finite input.
bool contains(const ConvexBody& body, const Vector& x);

// Chord through x along unit vector u, found by doubling outward then
// bisecting each end to tol.  Deterministic given its inputs.
Chord find_chord(const ConvexBody& body, const Vector& x, const Vector& u,
                 double tol);

// Sigma u / |Sigma u| with u uniform on the unit sphere (normalized
// isotropic Gaussian draw).
Vector sample_direction(const RoundingMap& map, Rng& rng);

}  // namespace annealopt

#endif  // ANNEALOPT_GEOMETRY_HPP_
