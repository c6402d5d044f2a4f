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

#include "serpbias/fairness.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace serpbias {
namespace {

void CheckPosition(std::span<const Group> groups, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > groups.size()) {
    throw InputError("evaluation point " + std::to_string(i) +
                     " outside 1.." + std::to_string(groups.size()));
  }
}

// Prefix share and whole-list share of g1.
struct Shares {
  double prefix;
  double overall;
};

Shares SharesAt(std::span<const Group> groups, int i) {
  CheckPosition(groups, i);
  return {GroupPrecisionAt(groups, i),
          GroupPrecisionAt(groups, static_cast<int>(groups.size()))};
}

// x * log2(x / y) with the 0 * log(0 / y) = 0 convention.
double KlTerm(double x, double y) {
  if (x == 0.0) return 0.0;
  if (y == 0.0) {
    throw MeasureUndefinedError("rKL: divergence is infinite");
  }
  return x * std::log2(x / y);
}

std::vector<Group> Arrangement(int list_len, int g1_count, bool g1_first) {
  std::vector<Group> out(static_cast<std::size_t>(list_len),
                         g1_first ? Group::kUnprotected : Group::kProtected);
  const Group fill = g1_first ? Group::kProtected : Group::kUnprotected;
  const int head = g1_first ? g1_count : list_len - g1_count;
  std::fill(out.begin(), out.begin() + head, fill);
  return out;
}

}  // namespace

std::string_view ToString(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kRnd:
      return "rnd";
    case BaselineKind::kRkl:
      return "rkl";
    case BaselineKind::kRrd:
      return "rrd";
  }
  return "";
}

std::optional<BaselineKind> ParseBaselineKind(std::string_view text) {
  if (text == "rnd") return BaselineKind::kRnd;
  if (text == "rkl") return BaselineKind::kRkl;
  if (text == "rrd") return BaselineKind::kRrd;
  return std::nullopt;
}

void BaselineConfig::Validate() const {
  if (step < 1) {
    throw ConfigError("step must be >= 1, got " + std::to_string(step));
  }
}

double GroupPrecisionAt(std::span<const Group> groups, int n) {
  if (n < 1) throw ConfigError("cutoff must be >= 1, got " + std::to_string(n));
  const std::size_t depth = std::min(groups.size(), static_cast<std::size_t>(n));
  const auto hits =
      std::count(groups.begin(), groups.begin() + depth, Group::kProtected);
  return static_cast<double>(hits) / n;
}

double DistanceRnd(std::span<const Group> groups, int i) {
  const Shares s = SharesAt(groups, i);
  return std::abs(s.prefix - s.overall);
}

double DistanceRkl(std::span<const Group> groups, int i) {
  const Shares s = SharesAt(groups, i);
  return KlTerm(s.prefix, s.overall) + KlTerm(1.0 - s.prefix, 1.0 - s.overall);
}

double DistanceRrd(std::span<const Group> groups, int i) {
  const Shares s = SharesAt(groups, i);
  if (s.overall >= 0.5) {
    throw MeasureUndefinedError(
        "rRD: protected group is not a minority (share " +
        std::to_string(s.overall) + ")");
  }
  if (s.prefix >= 1.0) {
    throw MeasureUndefinedError("rRD: top-" + std::to_string(i) +
                                " contains only protected documents");
  }
  return std::abs(s.prefix / (1.0 - s.prefix) - s.overall / (1.0 - s.overall));
}

double Distance(BaselineKind kind, std::span<const Group> groups, int i) {
  switch (kind) {
    case BaselineKind::kRnd:
      return DistanceRnd(groups, i);
    case BaselineKind::kRkl:
      return DistanceRkl(groups, i);
    case BaselineKind::kRrd:
      return DistanceRrd(groups, i);
  }
  return 0.0;
}

std::vector<int> EvaluationPoints(std::size_t list_len, int step) {
  BaselineConfig{step}.Validate();
  std::vector<int> points;
  for (std::size_t i = static_cast<std::size_t>(step); i <= list_len;
       i += static_cast<std::size_t>(step)) {
    if (i > 1) points.push_back(static_cast<int>(i));
  }
  return points;
}

double RawBaselineScore(std::span<const Group> groups,
                        const BaselineConfig& cfg) {
  cfg.Validate();
  if (groups.size() < static_cast<std::size_t>(cfg.step)) {
    throw InputError("list of " + std::to_string(groups.size()) +
                     " documents is shorter than the step " +
                     std::to_string(cfg.step));
  }
  double sum = 0.0;
  for (int i : EvaluationPoints(groups.size(), cfg.step)) {
    sum += Distance(cfg.kind, groups, i) / std::log2(static_cast<double>(i));
  }
  return sum;
}

double NormalizerZ(BaselineKind kind, int list_len, int g1_count, int step) {
  BaselineConfig cfg{step, kind};
  cfg.Validate();
  if (g1_count < 0 || list_len < 0 || g1_count > list_len) {
    throw InputError("group size " + std::to_string(g1_count) +
                     " outside 0.." + std::to_string(list_len));
  }
  if (g1_count == 0 || g1_count == list_len || list_len < step) return 0.0;
  double z = 0.0;
  for (bool g1_first : {true, false}) {
    const std::vector<Group> arrangement =
        Arrangement(list_len, g1_count, g1_first);
    try {
      z = std::max(z, RawBaselineScore(arrangement, cfg));
    } catch (const MeasureUndefinedError&) {
      return std::numeric_limits<double>::infinity();
    }
  }
  return z;
}

double BaselineScore(std::span<const Group> groups, const BaselineConfig& cfg) {
  const double raw = RawBaselineScore(groups, cfg);
  const auto g1_count = static_cast<int>(
      std::count(groups.begin(), groups.end(), Group::kProtected));
  const double z = NormalizerZ(cfg.kind, static_cast<int>(groups.size()),
                               g1_count, cfg.step);
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw MeasureUndefinedError(
        std::string(ToString(cfg.kind)) + ": normalizer is " +
        (z == 0.0 ? "zero" : "undefined") + " for " +
        std::to_string(g1_count) + " protected of " +
        std::to_string(groups.size()) + " documents");
  }
  return raw / z;
}

}  // namespace serpbias
