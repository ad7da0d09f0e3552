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

#ifndef ANNEALOPT_TARGETS_HPP_
#define ANNEALOPT_TARGETS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "annealopt/types.hpp"

namespace annealopt {

// Registered diagnostic targets shared by the test suites and the CLI
// (sample1d / verify subcommands).  Each declared beta is a constructive
// bound: the perturbation amplitude a gives a log-density within a of a
// concave one, hence a defect of 2a.

struct SamplerTarget {
  std::string name;
  std::function<double(double)> log_g;
  double lo = 0.0, hi = 1.0;
  double beta = 0.0;
};

// Ten 1-D beta-log-concave targets, beta in {0, 0.05, 0.2, 0.5}.
const std::vector<SamplerTarget>& sampler_targets();

const SamplerTarget& sampler_target(const std::string& name);

struct VerifyTarget {
  std::string name;
  int dim = 1;
  std::function<double(const Vector&)> f;  // convex part
  std::function<double(const Vector&)> F;  // perturbed objective
  double rho = 0.0;                        // sup |F - f|
  double beta = 0.0;                       // defect of exp(-F) = 2 rho
  Vector lo, hi;
};

// 1-D/2-D objectives with known convex parts, used for warm-start norms,
// Gibbs gaps and beta certification.
const std::vector<VerifyTarget>& verify_targets();

struct WalkTarget {
  std::string name;
  std::function<double(const Vector&)> log_g;
  double beta = 0.0;
  Vector lo, hi;  // axis box carrying the target
};

// 2-D stationarity targets for the Hit-and-Run walk.
const std::vector<WalkTarget>& walk_targets_2d();

}  // namespace annealopt

#endif  // ANNEALOPT_TARGETS_HPP_
