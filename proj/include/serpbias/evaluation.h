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

// The evaluation protocol: per-SERP bias for each measure, MB/MAB per
// engine, a one-sample t-test per (engine, measure) against zero bias and a
// paired t-test per (engine pair, measure) on per-query bias.

#ifndef SERPBIAS_EVALUATION_H_
#define SERPBIAS_EVALUATION_H_

#include <optional>
#include <string>
#include <vector>

#include "serpbias/bias.h"
#include "serpbias/dataset.h"
#include "serpbias/fairness.h"
#include "serpbias/stats.h"
#include "serpbias/utility.h"

namespace serpbias {

struct EvaluateOptions {
  // cutoff, persistence, log base and mode. measure_kind is ignored.
  MeasureConfig measure;
  std::vector<MeasureKind> measures = {MeasureKind::kPrecision,
                                       MeasureKind::kRbp, MeasureKind::kDcg};
  double alpha = 0.05;

  // Throws ConfigError.
  void Validate() const;
};

// The parameters a report was produced with.
struct ReportConfig {
  int cutoff = 10;
  double persistence = 0.8;
  double log_base = 2.0;
  EvaluationMode mode = EvaluationMode::kStance;
  std::vector<MeasureKind> measures;  // sorted by name
  double alpha = 0.05;
};

enum class TestStatus : std::uint8_t {
  kOk,
  // Zero-variance sample away from the null mean: t is infinite, p is 0.
  kDegenerate,
};

struct TestOutcome {
  TestStatus status = TestStatus::kOk;
  TTestResult result;
};

struct OneSampleEntry {
  std::string engine_id;
  MeasureKind measure = MeasureKind::kPrecision;
  TestOutcome test;
};

// Differences are engine_a minus engine_b, with engine_a < engine_b.
struct PairedEntry {
  std::string engine_a;
  std::string engine_b;
  MeasureKind measure = MeasureKind::kPrecision;
  TestOutcome test;
};

// Entries are sorted by engine id(s), then measure name.
struct ComparisonReport {
  ReportConfig config;
  std::vector<BiasSummary> summaries;
  std::vector<OneSampleEntry> one_sample;
  std::vector<PairedEntry> paired;
  // Set when the query set is too small for t-tests.
  bool statistics_skipped = false;
  std::vector<std::string> warnings;
};

ComparisonReport Evaluate(const Dataset& dataset,
                          const EvaluateOptions& options);

// One-sample test that maps a DegenerateSampleError to kDegenerate with
// t = +-inf and p = 0 instead of throwing.
TestOutcome RunOneSample(std::span<const double> values, double alpha);
TestOutcome RunPaired(std::span<const double> a, std::span<const double> b,
                      double alpha);

struct BaselineOptions {
  BaselineConfig baseline;
  // Stance mode groups by stance labels, ideology mode by ideology labels of
  // the transformed lists.
  EvaluationMode mode = EvaluationMode::kStance;
  std::string protected_label = "pro";
  std::string unprotected_label = "against";
  // Used for the bias values reported next to each baseline score.
  MeasureConfig measure;
  std::vector<MeasureKind> measures = {MeasureKind::kPrecision,
                                       MeasureKind::kRbp, MeasureKind::kDcg};

  void Validate() const;
};

struct BaselineEntry {
  std::string engine_id;
  std::string query_id;
  std::optional<double> score;  // unset when the baseline is undefined
  std::string error;            // why the score is unset
  std::vector<std::pair<MeasureKind, double>> betas;
};

struct BaselineReport {
  BaselineOptions options;
  std::vector<BaselineEntry> entries;  // sorted by engine, then query
};

BaselineReport EvaluateBaselines(const Dataset& dataset,
                                 const BaselineOptions& options);

}  // namespace serpbias

#endif  // SERPBIAS_EVALUATION_H_
