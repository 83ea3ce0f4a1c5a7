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

#include "qht/bounds.hpp"

#include <cmath>

namespace qht {

double keli_beta_bound(const ModularSpectrum& spec, double eps) {
  if (eps <= 0.0) throw invalid_input("keli_beta_bound: eps must be positive");
  long double tail = 0.0L;
  const int n = spec.dim();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!leq_band(spec.lambdas()[x], eps * spec.mus()[y]))
        tail += spec.weight_sigma(x, y);
  return static_cast<double>(tail);
}

double keli_beta_bound(const StatePair& pair, double eps) {
  return keli_beta_bound(ModularSpectrum(pair), eps);
}

double quasi_entropy(const StatePair& pair, double s) {
  if (s < 0.0 || s > 1.0) throw invalid_input("quasi_entropy: s must be in [0,1]");
  const Matrix rho_s =
      pair.rho.apply([s](double v) { return std::pow(v, s); }).matrix();
  const Matrix sigma_1ms =
      pair.sigma.apply([s](double v) { return std::pow(v, 1.0 - s); }).matrix();
  return (rho_s * sigma_1ms).trace().real();
}

ChernoffResult chernoff_bound(const StatePair& pair, double p) {
  if (!(p > 0.0 && p < 1.0))
    throw invalid_input("chernoff_bound: p must be in (0,1)");
  const double q = 1.0 - p;
  auto log_g = [&](double s) {
    return s * std::log(p) + (1.0 - s) * std::log(q) +
           std::log(quasi_entropy(pair, s));
  };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.0, b = 1.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = log_g(c), fd = log_g(d);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = log_g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = log_g(d);
    }
  }
  const double s_star = 0.5 * (a + b);
  return {std::exp(log_g(s_star)), s_star};
}

double min_bayes_risk_closed_form(const StatePair& pair, double p) {
  if (!(p > 0.0 && p < 1.0))
    throw invalid_input("min_bayes_risk_closed_form: p must be in (0,1)");
  const double q = 1.0 - p;
  const Matrix diff = p * pair.rho.matrix() - q * pair.sigma.matrix();
  const auto [pos, neg] = jordan_parts(HermitianMatrix{Matrix(diff)});
  return q - neg.matrix().trace().real();
}

double relative_entropy(const StatePair& pair) {
  const Matrix log_rho = pair.rho.apply([](double v) { return std::log(v); }).matrix();
  const Matrix log_sigma =
      pair.sigma.apply([](double v) { return std::log(v); }).matrix();
  return (pair.rho.matrix() * (log_rho - log_sigma)).trace().real();
}

double relative_entropy_variance(const StatePair& pair) {
  const Matrix log_rho = pair.rho.apply([](double v) { return std::log(v); }).matrix();
  const Matrix log_sigma =
      pair.sigma.apply([](double v) { return std::log(v); }).matrix();
  const Matrix l = log_rho - log_sigma;
  const double d = (pair.rho.matrix() * l).trace().real();
  const double second = (pair.rho.matrix() * l * l).trace().real();
  return second - d * d;
}

DivergenceReport divergences(const StatePair& pair) {
  return {relative_entropy(pair), relative_entropy_variance(pair)};
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

namespace {

// Acklam's rational approximation to the inverse normal CDF.
double quantile_seed(double u) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double lo = 0.02425;

  if (u < lo) {
    const double t = std::sqrt(-2.0 * std::log(u));
    return (((((c[0] * t + c[1]) * t + c[2]) * t + c[3]) * t + c[4]) * t + c[5]) /
           ((((d[0] * t + d[1]) * t + d[2]) * t + d[3]) * t + 1.0);
  }
  if (u > 1.0 - lo) {
    const double t = std::sqrt(-2.0 * std::log(1.0 - u));
    return -(((((c[0] * t + c[1]) * t + c[2]) * t + c[3]) * t + c[4]) * t + c[5]) /
           ((((d[0] * t + d[1]) * t + d[2]) * t + d[3]) * t + 1.0);
  }
  const double t = u - 0.5;
  const double r = t * t;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * t /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_quantile(double u) {
  if (!(u > 0.0 && u < 1.0))
    throw invalid_input("normal_quantile: u must be in (0,1)");
  double x = quantile_seed(u);
  // Newton refinement against the erfc-based CDF.
  for (int i = 0; i < 2; ++i) {
    const double err = normal_cdf(x) - u;
    const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
    if (pdf == 0.0) break;
    x -= err / pdf;
  }
  return x;
}

double second_order_prediction(double d, double v, double eps, double n) {
  if (!(eps > 0.0 && eps < 1.0))
    throw invalid_input("second_order_prediction: eps must be in (0,1)");
  if (n < 1.0) throw invalid_input("second_order_prediction: n must be >= 1");
  return n * d + std::sqrt(n) * std::sqrt(v) * normal_quantile(eps);
}

}  // namespace qht
