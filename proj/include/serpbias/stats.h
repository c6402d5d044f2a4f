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

// One-sample and paired two-tailed Student t-tests.

#ifndef SERPBIAS_STATS_H_
#define SERPBIAS_STATS_H_

#include <optional>
#include <span>

namespace serpbias {

struct TTestResult {
  double t_stat = 0.0;
  int df = 0;
  double p_value = 1.0;  // two-tailed
  double sample_mean = 0.0;
  double std_err = 0.0;
  // The significance level, when one was given and the null is rejected at
  // it (p_value < alpha).
  std::optional<double> reject_at;
};

// I_x(a, b) evaluated with a Lentz continued fraction. Requires a, b > 0 and
// 0 <= x <= 1 (ConfigError otherwise).
double RegularizedIncompleteBeta(double x, double a, double b);

// P(|T| >= |t|) for T ~ Student-t(df), i.e. I_{df/(df+t^2)}(df/2, 1/2).
// Throws ConfigError when df < 1.
double StudentTTwoSidedSf(double t, int df);

// H0: the true mean equals mu0. Throws InputError for fewer than two values.
// A constant sample equal to mu0 yields t = 0, p = 1; a constant sample
// different from mu0 throws DegenerateSampleError.
TTestResult OneSampleTTest(std::span<const double> values, double mu0 = 0.0,
                           std::optional<double> alpha = std::nullopt);

// OneSampleTTest(a - b, 0). Throws InputError when the lengths differ.
TTestResult PairedTTest(std::span<const double> a, std::span<const double> b,
                        std::optional<double> alpha = std::nullopt);

}  // namespace serpbias

#endif  // SERPBIAS_STATS_H_
