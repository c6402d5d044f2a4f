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

// Prefix-based group fairness baselines: normalized discounted difference
// (rND), KL divergence (rKL) and ratio difference (rRD).
//
// Each baseline compares the share of a protected group g1 in the top-i
// prefix with its share in the whole list, at evaluation points
// i = step, 2*step, ... <= |r|, discounts the distance by 1/log2(i) and
// divides by the normalizer Z, the largest raw score attainable for the
// same list length and group size:
//
//   score(r) = (1/Z) * sum_i |d(i, r)| / log2(i)
//
// The point i = 1 is skipped because log2(1) = 0. Logarithms are base 2.

#ifndef SERPBIAS_FAIRNESS_H_
#define SERPBIAS_FAIRNESS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <type_traits>
#include <vector>

#include "serpbias/errors.h"

namespace serpbias {

enum class BaselineKind : std::uint8_t { kRnd, kRkl, kRrd };

std::string_view ToString(BaselineKind kind);
std::optional<BaselineKind> ParseBaselineKind(std::string_view text);

enum class Group : std::uint8_t { kProtected, kUnprotected };

// Which label forms the protected group g1. Under the verbatim mapping a
// document is in g1 iff its label equals protected_label; every other
// document, including neutral and not-relevant ones, counts as unprotected.
template <typename Label>
struct GroupAssignment {
  Label protected_label;
  Label unprotected_label;

  void Validate() const {
    if (protected_label == unprotected_label) {
      throw ConfigError("protected and unprotected labels must differ");
    }
  }
  GroupAssignment Swapped() const {
    return {unprotected_label, protected_label};
  }
};

template <typename Label>
std::vector<Group> AssignGroups(
    std::span<const std::type_identity_t<Label>> labels,
    const GroupAssignment<Label>& groups) {
  groups.Validate();
  std::vector<Group> out;
  out.reserve(labels.size());
  for (const Label& label : labels) {
    out.push_back(label == groups.protected_label ? Group::kProtected
                                                  : Group::kUnprotected);
  }
  return out;
}

struct BaselineConfig {
  int step = 10;
  BaselineKind kind = BaselineKind::kRnd;

  // Throws ConfigError when step < 1.
  void Validate() const;
};

// Share of g1 among the first n positions (positions past the end count as
// not in g1). Throws ConfigError when n < 1.
double GroupPrecisionAt(std::span<const Group> groups, int n);

// |P@i - P@|r||.
double DistanceRnd(std::span<const Group> groups, int i);
// KL(P@i || P@|r|) between Bernoulli distributions, base 2, with
// 0 * log(0 / x) = 0. Throws MeasureUndefinedError when the divergence is
// infinite.
double DistanceRkl(std::span<const Group> groups, int i);
// |P@i / (1 - P@i) - P@|r| / (1 - P@|r|)|. Throws MeasureUndefinedError
// when P@i = 1 or when g1 is not a minority (P@|r| >= 0.5).
double DistanceRrd(std::span<const Group> groups, int i);

// All of the above require 1 <= i <= |r| (InputError otherwise).
double Distance(BaselineKind kind, std::span<const Group> groups, int i);

// step, 2*step, ... <= list_len, without 1.
std::vector<int> EvaluationPoints(std::size_t list_len, int step);

// Sum of discounted distances before normalization. Throws InputError when
// the list is shorter than the step.
double RawBaselineScore(std::span<const Group> groups,
                        const BaselineConfig& cfg);

// Largest raw score over the two extremal arrangements of g1_count
// protected documents in a list of list_len: all of g1 first, and all of g1
// last. Returns 0 for degenerate group sizes or when the list is shorter than
// the step. For rRD, returns +infinity when an extremal arrangement is itself
// undefined.
double NormalizerZ(BaselineKind kind, int list_len, int g1_count, int step);

// RawBaselineScore / NormalizerZ, in [0, 1]. Throws MeasureUndefinedError
// when Z is zero or not finite.
double BaselineScore(std::span<const Group> groups, const BaselineConfig& cfg);

template <typename Label>
double BaselineScore(std::span<const std::type_identity_t<Label>> labels,
                     const GroupAssignment<Label>& groups,
                     const BaselineConfig& cfg) {
  const std::vector<Group> assigned = AssignGroups<Label>(labels, groups);
  return BaselineScore(assigned, cfg);
}

}  // namespace serpbias

#endif  // SERPBIAS_FAIRNESS_H_
