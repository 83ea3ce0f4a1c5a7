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

#include <stdexcept>

namespace qht {

/// Malformed or non-finite input data.
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A real function was evaluated outside its domain (e.g. log of a
/// nonpositive eigenvalue).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A size guard or atom-count budget was exceeded.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A file could not be parsed; the message names the violated invariant.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qht
