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

#include <string>

#include "qht/states.hpp"

namespace qht {

/// State-pair file: JSON {"dim": n, "rho": M, "sigma": M} where M is an
/// n x n array of [re, im] pairs.  Throws parse_error naming the violated
/// invariant (shape, Hermiticity, trace, positivity).
StatePair load_state_pair(const std::string& path,
                          double floor = kDefaultFaithfulnessFloor);
StatePair parse_state_pair(const std::string& json_text,
                           double floor = kDefaultFaithfulnessFloor);

std::string state_pair_to_json(const StatePair& pair);
void save_state_pair(const StatePair& pair, const std::string& path);

}  // namespace qht
