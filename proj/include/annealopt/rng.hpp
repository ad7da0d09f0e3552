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

#ifndef ANNEALOPT_RNG_HPP_
#define ANNEALOPT_RNG_HPP_

#include <cstdint>

#include "annealopt/types.hpp"

namespace annealopt {

// SplitMix64 finalizer.  Used both to seed the generator state and as the
// keyed hash behind deterministic per-grid-cell noise.
std::uint64_t mix64(std::uint64_t z);

// Combine words into one hash value (order sensitive).
std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v);

// xoshiro256++ with explicit seeding.  We own the generator (instead of
// <random> engines/distributions) so that streams, substream derivation and
// Gaussian draws are bit-reproducible across platforms and standard
// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Substream keyed on (master, a, b); used to give strand b of epoch a an
  // independent stream regardless of thread assignment.
  static Rng stream(std::uint64_t master, std::uint64_t a, std::uint64_t b);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform();
  double uniform(double a, double b);

  // Standard normal via Box-Muller (second value cached).
  double normal();

  Vector normal_vector(Eigen::Index n);

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace annealopt

#endif  // ANNEALOPT_RNG_HPP_
