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

// Utility-based IR measures restricted to a single label: the measure
// counts a document as relevant iff its label equals the target.

#ifndef SERPBIAS_UTILITY_H_
#define SERPBIAS_UTILITY_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <type_traits>

namespace serpbias {

enum class MeasureKind : std::uint8_t { kPrecision, kRbp, kDcg };

enum class EvaluationMode : std::uint8_t { kStance, kIdeology };

inline constexpr MeasureKind kAllMeasures[] = {
    MeasureKind::kPrecision, MeasureKind::kRbp, MeasureKind::kDcg};

// Short names used on the command line and in reports: "p", "rbp", "dcg".
std::string_view ToString(MeasureKind kind);
std::string_view ToString(EvaluationMode mode);
// Accepts "p", "precision", "rbp" and "dcg".
std::optional<MeasureKind> ParseMeasureKind(std::string_view text);
std::optional<EvaluationMode> ParseEvaluationMode(std::string_view text);

struct MeasureConfig {
  int cutoff = 10;           // n, used by precision and DCG
  double persistence = 0.8;  // p, used by RBP
  double log_base = 2.0;     // DCG discount base
  MeasureKind measure_kind = MeasureKind::kPrecision;
  EvaluationMode mode = EvaluationMode::kStance;

  // Throws ConfigError unless n >= 1, 0 < p < 1 and log_base > 1.
  void Validate() const;
};

namespace internal {
void CheckCutoff(int n);
void CheckPersistence(double p);
void CheckLogBase(double base);
}  // namespace internal

// (1/n) * #{i <= n : labels[i] == target}. Positions past the end of the
// list count as non-matching.
template <typename Label>
double PrecisionAt(std::span<const std::type_identity_t<Label>> labels,
                   Label target, int n) {
  internal::CheckCutoff(n);
  const std::size_t depth =
      std::min(labels.size(), static_cast<std::size_t>(n));
  const auto hits = std::count(labels.begin(), labels.begin() + depth, target);
  return static_cast<double>(hits) / n;
}

// (1 - p) * sum_i p^(i-1) [labels[i] == target], over the whole list.
template <typename Label>
double RankBiasedPrecision(std::span<const std::type_identity_t<Label>> labels,
                           Label target, double p) {
  internal::CheckPersistence(p);
  double sum = 0.0;
  double weight = 1.0;
  for (const Label& label : labels) {
    if (label == target) sum += weight;
    weight *= p;
  }
  return (1.0 - p) * sum;
}

// sum_{i <= n} [labels[i] == target] / log_base(i + 1).
template <typename Label>
double DcgAt(std::span<const std::type_identity_t<Label>> labels, Label target,
             int n, double base) {
  internal::CheckCutoff(n);
  internal::CheckLogBase(base);
  const std::size_t depth =
      std::min(labels.size(), static_cast<std::size_t>(n));
  const double log_base = std::log(base);
  double sum = 0.0;
  for (std::size_t k = 0; k < depth; ++k) {
    if (labels[k] == target) sum += log_base / std::log(static_cast<double>(k + 2));
  }
  return sum;
}

// Dispatches on cfg.measure_kind.
template <typename Label>
double Utility(std::span<const std::type_identity_t<Label>> labels,
               Label target, const MeasureConfig& cfg) {
  switch (cfg.measure_kind) {
    case MeasureKind::kPrecision:
      return PrecisionAt<Label>(labels, target, cfg.cutoff);
    case MeasureKind::kRbp:
      return RankBiasedPrecision<Label>(labels, target, cfg.persistence);
    case MeasureKind::kDcg:
      return DcgAt<Label>(labels, target, cfg.cutoff, cfg.log_base);
  }
  return 0.0;
}

}  // namespace serpbias

#endif  // SERPBIAS_UTILITY_H_
