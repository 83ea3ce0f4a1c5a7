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

#include "qht/measure.hpp"

#include <algorithm>
#include <cmath>

namespace qht {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, double total,
                             double defect, double merge_tol)
    : defect_(defect), total_(total) {
  if (!(defect >= 0.0) || !std::isfinite(total))
    throw invalid_input("AtomicMeasure: bad total/defect");
  for (const Atom& a : atoms)
    if (!std::isfinite(a.position) || !(a.mass >= 0.0))
      throw invalid_input("AtomicMeasure: non-finite position or negative mass");

  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.position < b.position; });

  atoms_.reserve(atoms.size());
  for (const Atom& a : atoms) {
    if (a.mass == 0.0) continue;
    if (!atoms_.empty() && a.position - atoms_.back().position <= merge_tol) {
      Atom& last = atoms_.back();
      const double m = last.mass + a.mass;
      last.position = (last.position * last.mass + a.position * a.mass) / m;
      last.mass = m;
    } else {
      atoms_.push_back(a);
    }
  }
}

AtomicMeasure AtomicMeasure::dirac(double position, double mass) {
  return AtomicMeasure({{position, mass}}, mass, 0.0);
}

double AtomicMeasure::mass() const {
  long double s = 0.0L;
  for (const Atom& a : atoms_) s += a.mass;
  return static_cast<double>(s);
}

double AtomicMeasure::mean() const {
  long double s = 0.0L, m = 0.0L;
  for (const Atom& a : atoms_) {
    s += static_cast<long double>(a.mass) * a.position;
    m += a.mass;
  }
  return m > 0.0L ? static_cast<double>(s / m) : 0.0;
}

double AtomicMeasure::variance() const {
  const double mu = mean();
  long double s = 0.0L, m = 0.0L;
  for (const Atom& a : atoms_) {
    const long double d = a.position - mu;
    s += static_cast<long double>(a.mass) * d * d;
    m += a.mass;
  }
  return m > 0.0L ? static_cast<double>(s / m) : 0.0;
}

double AtomicMeasure::abs_central_moment(int k) const {
  const double mu = mean();
  long double s = 0.0L, m = 0.0L;
  for (const Atom& a : atoms_) {
    s += static_cast<long double>(a.mass) *
         std::pow(std::abs(a.position - mu), k);
    m += a.mass;
  }
  return m > 0.0L ? static_cast<double>(s / m) : 0.0;
}

}  // namespace qht
