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
#include <map>
#include <string>
#include <vector>

namespace qht {

struct VerifyConfig {
  std::uint64_t seed = 42;
  int dim = 2;
  int trials = 100;
  std::vector<double> eps_grid = {0.01, 0.1, 0.5, 1.0, 2.0, 10.0};
  int random_projectors = 1000;
};

struct OracleConfig {
  std::uint64_t seed = 42;
  int pairs = 20;
  std::vector<int> n_list = {2, 3};
  std::vector<double> eps_list = {0.25, 0.8, 2.0};
  double tol = 1e-9;
};

/// Outcome of a property sweep: per-inequality worst slack (signed,
/// negative means satisfied with margin) and a list of failing checks.
struct VerifyReport {
  int instances = 0;
  std::vector<std::string> failures;
  std::map<std::string, double> max_slacks;

  bool ok() const { return failures.empty(); }
  void record(const std::string& name, double slack, double tol,
              const std::string& context);
};

/// Property suites of the test-construction and scalar-bound modules over
/// seeded random pairs, generic and commuting.
VerifyReport run_verify(const VerifyConfig& config);

/// Convolution-path vs direct tensor-power bound equivalence on random
/// qubit pairs.
VerifyReport run_oracle(const OracleConfig& config);

std::string report_to_json(const VerifyReport& report, bool with_timestamp);

}  // namespace qht
