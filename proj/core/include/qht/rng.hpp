// Copyright 2026 The qht Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "qht/hermitian.hpp"

namespace qht {

/// Deterministic generator.  Gaussians are produced by an explicit
/// Box-Muller transform so output is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform in (0, 1) (never exactly zero).
  double uniform_open();
  double gaussian();
  Complex complex_gaussian();  // independent N(0,1) real and imaginary parts

  Matrix ginibre(int rows, int cols);
  Matrix haar_unitary(int dim);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Derives an independent stream seed (splitmix64 of seed xor stream tag).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace qht
