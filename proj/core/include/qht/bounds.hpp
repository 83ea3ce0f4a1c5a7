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

#include "qht/modular.hpp"
#include "qht/states.hpp"

namespace qht {

/// Relative entropy D (nats) and relative-entropy variance V (nats^2).
struct DivergenceReport {
  double D;
  double V;
};

struct ChernoffResult {
  double value;
  double s_star;
};

/// Tail weight of the modular spectrum above eps in the sigma vector
/// state: sum of weight_sigma over pairs with lambda_x strictly greater
/// than eps mu_y (ind_tol band on the boundary).
double keli_beta_bound(const ModularSpectrum& spec, double eps);
double keli_beta_bound(const StatePair& pair, double eps);

/// trace(rho^s sigma^{1-s}), computed through functional calculus on the
/// two states (the modular-spectrum route is an independent cross-check).
double quasi_entropy(const StatePair& pair, double s);

/// Minimizes p^s q^{1-s} trace(rho^s sigma^{1-s}) over s in [0,1] by
/// golden-section search on the log (log-convex, hence unimodal).
ChernoffResult chernoff_bound(const StatePair& pair, double p);

/// q - trace of the negative Jordan part of p rho - q sigma.
double min_bayes_risk_closed_form(const StatePair& pair, double p);

double relative_entropy(const StatePair& pair);
double relative_entropy_variance(const StatePair& pair);
DivergenceReport divergences(const StatePair& pair);

double normal_cdf(double x);
/// Inverse standard normal CDF, absolute error below 1e-9.
double normal_quantile(double u);

/// n D + sqrt(n) sqrt(V) * quantile(eps).
double second_order_prediction(double d, double v, double eps, double n);

}  // namespace qht
