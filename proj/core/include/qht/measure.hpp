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

#include <cstddef>
#include <vector>

#include "qht/errors.hpp"

namespace qht {

inline constexpr double kDefaultMergeTol = 1e-12;

struct Atom {
  double position;
  double mass;
};

/// Finite nonnegative atomic measure on the real line with strictly
/// ascending positions.  "defect" tracks mass removed by pruning so tail
/// queries can report a rigorous enclosure; mass + defect equals the
/// recorded total.
class AtomicMeasure {
 public:
  /// Sorts the atoms and merges positions within merge_tol
  /// (mass-weighted); drops exact-zero masses.
  AtomicMeasure(std::vector<Atom> atoms, double total = 1.0,
                double defect = 0.0, double merge_tol = kDefaultMergeTol);

  static AtomicMeasure dirac(double position, double mass = 1.0);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double defect() const { return defect_; }
  double total() const { return total_; }

  double mass() const;
  double mean() const;
  double variance() const;
  /// k-th absolute moment about the mean.
  double abs_central_moment(int k) const;

 private:
  std::vector<Atom> atoms_;
  double defect_;
  double total_;
};

}  // namespace qht
