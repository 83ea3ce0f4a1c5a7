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

#include <vector>

#include "qht/bounds.hpp"
#include "qht/measure.hpp"
#include "qht/states.hpp"

namespace qht {

inline constexpr std::size_t kDefaultAtomBudget = 5'000'000;

/// Rigorous enclosure of a tail mass under pruning and merging.
struct TailInterval {
  double lower;
  double upper;
  double midpoint() const { return 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
};

/// Convolution of two atomic measures: positions add, masses multiply.
/// Atoms with mass below prune_tol are dropped into the defect; the
/// defect is propagated one-sidedly (always an upper account).
AtomicMeasure convolve(const AtomicMeasure& a, const AtomicMeasure& b,
                       double merge_tol = kDefaultMergeTol,
                       double prune_tol = 0.0);

/// n-fold convolution power by binary exponentiation.  Throws
/// resource_error when the working atom count exceeds the budget.
AtomicMeasure convolve_power(const AtomicMeasure& m, int n,
                             double merge_tol = kDefaultMergeTol,
                             double prune_tol = 0.0,
                             std::size_t atom_budget = kDefaultAtomBudget);

/// Mass beyond the threshold.  Atoms inside the band
/// |position - threshold| <= band_tol count toward the upper end only
/// (strict) or toward both ends (non-strict); the defect widens the
/// upper end.
TailInterval tail_mass(const AtomicMeasure& m, double threshold, bool strict,
                       double band_tol = kDefaultMergeTol);

/// Tail bound on beta for the n-fold tensor-power pair, evaluated as the
/// tail above log(eps) of the n-fold convolution of the sigma-reference
/// spectral distribution.
TailInterval iid_keli_beta_bound(const StatePair& pair, double eps, int n,
                                 double merge_tol = kDefaultMergeTol,
                                 double prune_tol = 0.0);

/// Direct oracle: build the tensor powers explicitly (small n only) and
/// evaluate the single-copy bound on them.
double tensor_beta_bound_direct(const StatePair& pair, double eps, int n);

struct SteinRow {
  int n;
  double log_eps_n;
  TailInterval alpha_tail;
  double minus_log_beta;
  double predicted;
};

/// Distribution of log of the reversed modular operator (sigma relative
/// to rho) in the rho vector state: atom weight_rho at -log(lambda/mu).
/// Mean -D, variance V; this drives the second-order expansion.
AtomicMeasure stein_base_measure(const StatePair& pair,
                                 double merge_tol = kDefaultMergeTol);

/// For each n: eps_n = exp(-(nD + sqrt(n) sqrt(V) quantile(eps))); the
/// tail of the n-fold base-measure convolution above log(eps_n) encloses
/// the type-I error of the complement test whose beta is exactly eps_n.
/// The alpha tail converges to eps as n grows.
std::vector<SteinRow> stein_experiment(const StatePair& pair, double eps,
                                       const std::vector<int>& n_list,
                                       double merge_tol = kDefaultMergeTol,
                                       double prune_tol = 1e-18);

}  // namespace qht
