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

#include "annealopt/targets.hpp"

#include <cmath>

namespace annealopt {

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

Vector vec1(double a) {
  Vector v(1);
  v << a;
  return v;
}

}  // namespace

const std::vector<SamplerTarget>& sampler_targets() {
  static const std::vector<SamplerTarget> targets = {
      {"uniform", [](double) { return 0.0; }, 0.0, 1.0, 0.0},
      {"exp5", [](double x) { return -5.0 * x; }, 0.0, 1.0, 0.0},
      {"gauss-sharp",
       [](double x) { return -(x - 0.3) * (x - 0.3) / 0.02; }, 0.0, 1.0, 0.0},
      {"laplace-kink", [](double x) { return -5.0 * std::abs(x - 0.6); }, 0.0,
       1.0, 0.0},
      {"exp5-sine05",
       [](double x) { return -5.0 * x + 0.025 * std::sin(40.0 * x); }, 0.0,
       1.0, 0.05},
      {"gauss-step05",
       [](double x) {
         return -2.0 * (x - 0.5) * (x - 0.5) +
                0.025 * sgn(std::sin(30.0 * x));
       },
       0.0, 1.0, 0.05},
      {"exp5-sine20",
       [](double x) { return -5.0 * x + 0.1 * std::sin(50.0 * x); }, 0.0, 1.0,
       0.2},
      {"laplace-step20",
       [](double x) {
         return -8.0 * std::abs(x - 0.3) + 0.1 * sgn(std::cos(20.0 * x));
       },
       0.0, 1.0, 0.2},
      {"exp3-sine50",
       [](double x) { return -3.0 * x + 0.25 * std::sin(15.0 * x); }, 0.0, 1.0,
       0.5},
      {"gauss-step50",
       [](double x) {
         return -4.0 * (x - 0.7) * (x - 0.7) +
                0.25 * sgn(std::sin(25.0 * x));
       },
       0.0, 1.0, 0.5},
  };
  return targets;
}

const SamplerTarget& sampler_target(const std::string& name) {
  for (const auto& t : sampler_targets()) {
    if (t.name == name) return t;
  }
  throw ConfigError("unknown 1-D sampler target: " + name);
}

const std::vector<VerifyTarget>& verify_targets() {
  static const std::vector<VerifyTarget> targets = [] {
    std::vector<VerifyTarget> out;

    VerifyTarget t;
    t.name = "v1-linear";
    t.dim = 1;
    t.f = [](const Vector& x) { return x[0]; };
    t.F = t.f;
    t.rho = 0.0;
    t.beta = 0.0;
    t.lo = vec1(0.0);
    t.hi = vec1(1.0);
    out.push_back(t);

    t.name = "v1-quad";
    t.f = [](const Vector& x) { return (x[0] - 0.4) * (x[0] - 0.4); };
    t.F = t.f;
    out.push_back(t);

    t.name = "v1-quad-sine";
    t.f = [](const Vector& x) { return (x[0] - 0.4) * (x[0] - 0.4); };
    t.F = [](const Vector& x) {
      return (x[0] - 0.4) * (x[0] - 0.4) + 0.025 * std::sin(40.0 * x[0]);
    };
    t.rho = 0.025;
    t.beta = 0.05;
    out.push_back(t);

    t.name = "v1-abs-step";
    t.f = [](const Vector& x) { return 1.5 * std::abs(x[0] - 0.6); };
    t.F = [](const Vector& x) {
      return 1.5 * std::abs(x[0] - 0.6) + 0.1 * sgn(std::sin(20.0 * x[0]));
    };
    t.rho = 0.1;
    t.beta = 0.2;
    out.push_back(t);

    t = VerifyTarget();
    t.name = "v2-linear";
    t.dim = 2;
    t.f = [](const Vector& x) { return x[0] + x[1]; };
    t.F = t.f;
    t.lo = vec2(0.0, 0.0);
    t.hi = vec2(1.0, 1.0);
    out.push_back(t);

    t.name = "v2-quad";
    t.f = [](const Vector& x) {
      return (x[0] - 0.4) * (x[0] - 0.4) + (x[1] - 0.6) * (x[1] - 0.6);
    };
    t.F = t.f;
    out.push_back(t);

    t.name = "v2-quad-sine";
    t.f = [](const Vector& x) {
      return (x[0] - 0.4) * (x[0] - 0.4) + (x[1] - 0.6) * (x[1] - 0.6);
    };
    t.F = [](const Vector& x) {
      return (x[0] - 0.4) * (x[0] - 0.4) + (x[1] - 0.6) * (x[1] - 0.6) +
             0.05 * std::sin(30.0 * x[0]) * std::sin(30.0 * x[1]);
    };
    t.rho = 0.05;
    t.beta = 0.1;
    out.push_back(t);

    return out;
  }();
  return targets;
}

const std::vector<WalkTarget>& walk_targets_2d() {
  static const std::vector<WalkTarget> targets = [] {
    std::vector<WalkTarget> out;

    WalkTarget t;
    t.name = "w2-uniform";
    t.log_g = [](const Vector&) { return 0.0; };
    t.beta = 0.0;
    t.lo = vec2(-1.0, -1.0);
    t.hi = vec2(1.0, 1.0);
    out.push_back(t);

    t.name = "w2-l1";
    t.log_g = [](const Vector& x) {
      return -5.0 * (std::abs(x[0]) + std::abs(x[1]));
    };
    out.push_back(t);

    t.name = "w2-gauss-pert";
    t.log_g = [](const Vector& x) {
      return -x.squaredNorm() / 0.5 +
             0.05 * sgn(std::sin(12.0 * x[0]) * std::sin(12.0 * x[1]));
    };
    t.beta = 0.1;
    out.push_back(t);

    return out;
  }();
  return targets;
}

}  // namespace annealopt
