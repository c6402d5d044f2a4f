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

#include "serpbias/utility.h"

#include <string>

#include "serpbias/errors.h"

namespace serpbias {

std::string_view ToString(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::kPrecision:
      return "p";
    case MeasureKind::kRbp:
      return "rbp";
    case MeasureKind::kDcg:
      return "dcg";
  }
  return "";
}

std::string_view ToString(EvaluationMode mode) {
  return mode == EvaluationMode::kStance ? "stance" : "ideology";
}

std::optional<MeasureKind> ParseMeasureKind(std::string_view text) {
  if (text == "p" || text == "precision") return MeasureKind::kPrecision;
  if (text == "rbp") return MeasureKind::kRbp;
  if (text == "dcg") return MeasureKind::kDcg;
  return std::nullopt;
}

std::optional<EvaluationMode> ParseEvaluationMode(std::string_view text) {
  if (text == "stance") return EvaluationMode::kStance;
  if (text == "ideology") return EvaluationMode::kIdeology;
  return std::nullopt;
}

void MeasureConfig::Validate() const {
  internal::CheckCutoff(cutoff);
  internal::CheckPersistence(persistence);
  internal::CheckLogBase(log_base);
}

namespace internal {

void CheckCutoff(int n) {
  if (n < 1) {
    throw ConfigError("cutoff must be >= 1, got " + std::to_string(n));
  }
}

void CheckPersistence(double p) {
  // Negated form so that NaN is rejected too.
  if (!(p > 0.0 && p < 1.0)) {
    throw ConfigError("persistence must lie in (0, 1), got " +
                      std::to_string(p));
  }
}

void CheckLogBase(double base) {
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw ConfigError("log base must be > 1, got " + std::to_string(base));
  }
}

}  // namespace internal
}  // namespace serpbias
