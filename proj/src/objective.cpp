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

#include "annealopt/objective.hpp"

#include <utility>

namespace annealopt {

void OracleStats::observe(const Vector& x, double value, std::int64_t cost) {
  queries += cost;
  evals += 1;
  if (value < best_value) {
    best_value = value;
    best_point = x;
  }
}

void OracleStats::merge(const OracleStats& other) {
  queries += other.queries;
  evals += other.evals;
  if (other.best_value < best_value) {
    best_value = other.best_value;
    best_point = other.best_point;
  }
}

ObjectiveOracle::ObjectiveOracle(Fn f, double rho, std::int64_t cost_per_call,
                                 std::string name)
    : f_(std::move(f)), rho_(rho), cost_(cost_per_call),
      name_(std::move(name)) {
  if (rho_ < 0.0) throw InvalidInputError("rho must be >= 0");
  if (cost_ < 1) throw InvalidInputError("cost per call must be >= 1");
}

double ObjectiveOracle::operator()(const Vector& x, OracleStats& stats) const {
  const double value = f_(x);
  stats.observe(x, value, cost_);
  return value;
}

}  // namespace annealopt
