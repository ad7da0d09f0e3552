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

#ifndef ANNEALOPT_TYPES_HPP_
#define ANNEALOPT_TYPES_HPP_

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <string>

namespace annealopt {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (bad argument, point outside
// the body, malformed parameters).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Chord extraction or direction sampling failed (inconsistent membership
// oracle, degenerate transform).
class GeometryError : public Error {
 public:
  using Error::Error;
};

// The unidimensional sampler exhausted an iteration budget or was handed a
// degenerate target.  Carries the best offset seen so far when one exists.
class SamplerError : public Error {
 public:
  explicit SamplerError(const std::string& what,
                        std::optional<double> best_offset = std::nullopt)
      : Error(what), best_offset(best_offset) {}
  std::optional<double> best_offset;
};

// Covariance update could not produce an invertible rounding map.
class RoundingError : public Error {
 public:
  using Error::Error;
};

// Run configuration is unusable (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A scalar root finder could not bracket a solution.
class SolverError : public Error {
 public:
  using Error::Error;
};

// A quadrature result is dominated by floating-point underflow.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// A query fell outside the region an oracle is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace annealopt

#endif  // ANNEALOPT_TYPES_HPP_
