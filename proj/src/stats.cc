// Copyright 2026 The serpbias Authors.
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

#include "serpbias/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "serpbias/errors.h"

namespace serpbias {
namespace {

constexpr int kMaxIterations = 10000;
constexpr double kEpsilon = 1e-16;
constexpr double kTiny = 1e-300;

// Continued fraction for I_x(a, b), modified Lentz. Converges quickly for
// x < (a + 1) / (a + b + 2).
double BetaContinuedFraction(double x, double a, double b) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) break;
  }
  return h;
}

}  // namespace

double RegularizedIncompleteBeta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw ConfigError("incomplete beta requires a, b > 0");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ConfigError("incomplete beta requires 0 <= x <= 1, got " +
                      std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * BetaContinuedFraction(x, a, b) / a;
  }
  return 1.0 - front * BetaContinuedFraction(1.0 - x, b, a) / b;
}

double StudentTTwoSidedSf(double t, int df) {
  if (df < 1) {
    throw ConfigError("degrees of freedom must be >= 1, got " +
                      std::to_string(df));
  }
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(t)) return 0.0;
  const double nu = static_cast<double>(df);
  const double p = RegularizedIncompleteBeta(nu / (nu + t * t), nu / 2.0, 0.5);
  return std::clamp(p, 0.0, 1.0);
}

TTestResult OneSampleTTest(std::span<const double> values, double mu0,
                           std::optional<double> alpha) {
  if (values.size() < 2) {
    throw InputError("t-test needs at least 2 values, got " +
                     std::to_string(values.size()));
  }
  const auto n = static_cast<double>(values.size());
  TTestResult result;
  result.df = static_cast<int>(values.size()) - 1;

  const bool constant = std::all_of(values.begin(), values.end(),
                                    [&](double v) { return v == values[0]; });
  if (constant) {
    result.sample_mean = values[0];
    result.std_err = 0.0;
    if (values[0] != mu0) {
      throw DegenerateSampleError(
          "zero-variance sample with mean " + std::to_string(values[0]) +
              " != " + std::to_string(mu0),
          values[0], result.df);
    }
    result.t_stat = 0.0;
    result.p_value = 1.0;
    return result;
  }

  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (n - 1.0));

  result.sample_mean = mean;
  result.std_err = sd / std::sqrt(n);
  result.t_stat = (mean - mu0) / result.std_err;
  result.p_value = StudentTTwoSidedSf(result.t_stat, result.df);
  if (alpha && result.p_value < *alpha) result.reject_at = *alpha;
  return result;
}

TTestResult PairedTTest(std::span<const double> a, std::span<const double> b,
                        std::optional<double> alpha) {
  if (a.size() != b.size()) {
    throw InputError("paired t-test on samples of different sizes (" +
                     std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
  }
  std::vector<double> diff(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) diff[k] = a[k] - b[k];
  return OneSampleTTest(diff, 0.0, alpha);
}

}  // namespace serpbias
