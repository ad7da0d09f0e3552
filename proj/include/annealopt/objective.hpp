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

#ifndef ANNEALOPT_OBJECTIVE_HPP_
#define ANNEALOPT_OBJECTIVE_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "annealopt/types.hpp"

namespace annealopt {

// Per-caller evaluation bookkeeping.  Each strand owns one; results are
// merged in strand order after joins, so parallel runs reproduce serial
// ones bit for bit.
struct OracleStats {
  std::int64_t queries = 0;  // billed oracle calls (cost-weighted)
  std::int64_t evals = 0;    // F evaluations
  double best_value = std::numeric_limits<double>::infinity();
  Vector best_point;

  void observe(const Vector& x, double value, std::int64_t cost);
  void merge(const OracleStats& other);
};

// Evaluable objective F with query accounting.  The declared non-convexity
// bound rho is the caller's sup |F - f| statement; it is never estimated.
// A single evaluation may be billed as several underlying oracle calls
// (repeated-query noise reduction).
class ObjectiveOracle {
 public:
  using Fn = std::function<double(const Vector&)>;

  ObjectiveOracle(Fn f, double rho, std::int64_t cost_per_call = 1,
                  std::string name = "");

  double operator()(const Vector& x, OracleStats& stats) const;

  double rho() const { return rho_; }
  std::int64_t cost_per_call() const { return cost_; }
  const std::string& name() const { return name_; }

 private:
  Fn f_;
  double rho_;
  std::int64_t cost_;
  std::string name_;
};

}  // namespace annealopt

#endif  // ANNEALOPT_OBJECTIVE_HPP_
