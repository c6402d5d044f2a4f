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

// Random generators and brute-force oracles shared by the tests. The oracles
// re-derive every quantity from its defining sum and must not call into the
// measure implementations they check.

#ifndef SERPBIAS_TESTS_TEST_UTIL_H_
#define SERPBIAS_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "serpbias/fairness.h"
#include "serpbias/model.h"
#include "serpbias/utility.h"

namespace serpbias::testing {

inline std::vector<StanceLabel> RandomStances(std::mt19937_64& rng,
                                              std::size_t length) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<StanceLabel> out(length);
  for (auto& label : out) label = kAllStances[pick(rng)];
  return out;
}

inline RankedList RandomList(std::mt19937_64& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<int> leaning(0, 2);
  return RankedList::FromStances(RandomStances(rng, len(rng)),
                                 kAllLeanings[leaning(rng)]);
}

// +1 for pro, -1 for against, 0 otherwise.
inline int Side(StanceLabel label) {
  if (label == StanceLabel::kPro) return 1;
  if (label == StanceLabel::kAgainst) return -1;
  return 0;
}

// Direct evaluation of the three bias sums, position by position.
inline double OracleBiasPrecision(const std::vector<StanceLabel>& r, int n) {
  double sum = 0.0;
  for (int i = 1; i <= n; ++i) {
    if (i <= static_cast<int>(r.size())) sum += Side(r[i - 1]);
  }
  return sum / n;
}

inline double OracleBiasRbp(const std::vector<StanceLabel>& r, double p) {
  double sum = 0.0;
  for (std::size_t i = 1; i <= r.size(); ++i) {
    sum += std::pow(p, static_cast<double>(i - 1)) * Side(r[i - 1]);
  }
  return (1.0 - p) * sum;
}

inline double OracleBiasDcg(const std::vector<StanceLabel>& r, int n,
                            double base) {
  double sum = 0.0;
  for (int i = 1; i <= n && i <= static_cast<int>(r.size()); ++i) {
    sum += Side(r[i - 1]) / (std::log(i + 1.0) / std::log(base));
  }
  return sum;
}

// Raw fairness score from the definitions, using explicit prefix counts.
inline double OracleRawBaseline(BaselineKind kind,
                                const std::vector<bool>& protected_at,
                                int step) {
  const int len = static_cast<int>(protected_at.size());
  const double overall =
      static_cast<double>(std::count(protected_at.begin(), protected_at.end(), true)) / len;
  double sum = 0.0;
  for (int i = step; i <= len; i += step) {
    if (i == 1) continue;
    int hits = 0;
    for (int k = 0; k < i; ++k) hits += protected_at[k] ? 1 : 0;
    const double prefix = static_cast<double>(hits) / i;
    double d = 0.0;
    switch (kind) {
      case BaselineKind::kRnd:
        d = std::fabs(prefix - overall);
        break;
      case BaselineKind::kRkl: {
        auto term = [](double x, double y) {
          return x == 0.0 ? 0.0 : x * std::log(x / y) / std::log(2.0);
        };
        d = term(prefix, overall) + term(1.0 - prefix, 1.0 - overall);
        break;
      }
      case BaselineKind::kRrd:
        d = std::fabs(prefix / (1.0 - prefix) - overall / (1.0 - overall));
        break;
    }
    sum += d / (std::log(static_cast<double>(i)) / std::log(2.0));
  }
  return sum;
}

// Maximum raw score over all C(len, g1_count) arrangements.
inline double BruteForceZ(BaselineKind kind, int len, int g1_count, int step) {
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    if (std::popcount(mask) != g1_count) continue;
    std::vector<bool> arrangement(len);
    for (int k = 0; k < len; ++k) arrangement[k] = (mask >> k) & 1u;
    best = std::max(best, OracleRawBaseline(kind, arrangement, step));
  }
  return best;
}

inline std::vector<Group> ToGroups(const std::vector<bool>& protected_at) {
  std::vector<Group> out;
  for (bool p : protected_at) {
    out.push_back(p ? Group::kProtected : Group::kUnprotected);
  }
  return out;
}

}  // namespace serpbias::testing

#endif  // SERPBIAS_TESTS_TEST_UTIL_H_
