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

#include "serpbias/evaluation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "serpbias/errors.h"

namespace serpbias {
namespace {

std::vector<MeasureKind> SortedMeasures(std::vector<MeasureKind> measures) {
  std::sort(measures.begin(), measures.end(),
            [](MeasureKind a, MeasureKind b) { return ToString(a) < ToString(b); });
  measures.erase(std::unique(measures.begin(), measures.end()), measures.end());
  return measures;
}

TestOutcome Degenerate(const DegenerateSampleError& e, double alpha) {
  TestOutcome outcome;
  outcome.status = TestStatus::kDegenerate;
  outcome.result.df = e.df();
  outcome.result.sample_mean = e.mean();
  outcome.result.std_err = 0.0;
  outcome.result.t_stat =
      std::copysign(std::numeric_limits<double>::infinity(), e.mean());
  outcome.result.p_value = 0.0;
  outcome.result.reject_at = alpha;
  return outcome;
}

void CheckAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
}

}  // namespace

void EvaluateOptions::Validate() const {
  measure.Validate();
  CheckAlpha(alpha);
  if (measures.empty()) throw ConfigError("no measures selected");
}

TestOutcome RunOneSample(std::span<const double> values, double alpha) {
  try {
    return {TestStatus::kOk, OneSampleTTest(values, 0.0, alpha)};
  } catch (const DegenerateSampleError& e) {
    return Degenerate(e, alpha);
  }
}

TestOutcome RunPaired(std::span<const double> a, std::span<const double> b,
                      double alpha) {
  try {
    return {TestStatus::kOk, PairedTTest(a, b, alpha)};
  } catch (const DegenerateSampleError& e) {
    return Degenerate(e, alpha);
  }
}

ComparisonReport Evaluate(const Dataset& dataset,
                          const EvaluateOptions& options) {
  options.Validate();
  ComparisonReport report;
  report.config.cutoff = options.measure.cutoff;
  report.config.persistence = options.measure.persistence;
  report.config.log_base = options.measure.log_base;
  report.config.mode = options.measure.mode;
  report.config.measures = SortedMeasures(options.measures);
  report.config.alpha = options.alpha;

  std::vector<const EngineRun*> runs;
  for (const EngineRun& run : dataset.runs) runs.push_back(&run);
  std::sort(runs.begin(), runs.end(), [](const EngineRun* a, const EngineRun* b) {
    return a->engine_id() < b->engine_id();
  });

  // betas[engine][measure], each ordered by query id.
  std::map<std::string, std::map<MeasureKind, std::vector<double>>> betas;
  for (const EngineRun* run : runs) {
    for (MeasureKind kind : report.config.measures) {
      MeasureConfig cfg = options.measure;
      cfg.measure_kind = kind;
      BiasSummary summary = Summarize(*run, cfg);
      auto& values = betas[run->engine_id()][kind];
      for (const BiasRecord& record : summary.per_query) {
        values.push_back(record.beta);
      }
      report.summaries.push_back(std::move(summary));
    }
  }

  if (dataset.queries.size() < 2) {
    report.statistics_skipped = true;
    report.warnings.push_back("t-tests skipped: " +
                              std::to_string(dataset.queries.size()) +
                              " query, at least 2 are required");
    return report;
  }

  for (const EngineRun* run : runs) {
    for (MeasureKind kind : report.config.measures) {
      report.one_sample.push_back(
          {run->engine_id(), kind,
           RunOneSample(betas[run->engine_id()][kind], options.alpha)});
    }
  }
  for (std::size_t a = 0; a < runs.size(); ++a) {
    for (std::size_t b = a + 1; b < runs.size(); ++b) {
      const std::string& ea = runs[a]->engine_id();
      const std::string& eb = runs[b]->engine_id();
      for (MeasureKind kind : report.config.measures) {
        report.paired.push_back(
            {ea, eb, kind,
             RunPaired(betas[ea][kind], betas[eb][kind], options.alpha)});
      }
    }
  }
  return report;
}

void BaselineOptions::Validate() const {
  baseline.Validate();
  measure.Validate();
  if (mode == EvaluationMode::kStance) {
    if (!ParseStance(protected_label) || !ParseStance(unprotected_label)) {
      throw ConfigError("unknown stance group label");
    }
    GroupAssignment<StanceLabel>{*ParseStance(protected_label),
                                 *ParseStance(unprotected_label)}
        .Validate();
  } else {
    const auto g1 = ParseIdeology(protected_label);
    const auto g2 = ParseIdeology(unprotected_label);
    if (!g1 || !g2 || *g1 == IdeologyLabel::kExcluded ||
        *g2 == IdeologyLabel::kExcluded) {
      throw ConfigError("unknown ideology group label");
    }
    GroupAssignment<IdeologyLabel>{*g1, *g2}.Validate();
  }
}

BaselineReport EvaluateBaselines(const Dataset& dataset,
                                 const BaselineOptions& options) {
  options.Validate();
  BaselineReport report;
  report.options = options;
  report.options.measures = SortedMeasures(options.measures);

  std::vector<const EngineRun*> runs;
  for (const EngineRun& run : dataset.runs) runs.push_back(&run);
  std::sort(runs.begin(), runs.end(), [](const EngineRun* a, const EngineRun* b) {
    return a->engine_id() < b->engine_id();
  });

  for (const EngineRun* run : runs) {
    for (const auto& [query_id, list] : run->lists()) {
      BaselineEntry entry{run->engine_id(), query_id, std::nullopt, "", {}};
      std::vector<Group> groups;
      if (options.mode == EvaluationMode::kStance) {
        groups = AssignGroups<StanceLabel>(
            list.Stances(), {*ParseStance(options.protected_label),
                             *ParseStance(options.unprotected_label)});
      } else {
        groups = AssignGroups<IdeologyLabel>(
            TransformList(list).Ideologies(),
            {*ParseIdeology(options.protected_label),
             *ParseIdeology(options.unprotected_label)});
      }
      try {
        entry.score = BaselineScore(groups, options.baseline);
      } catch (const MeasureUndefinedError& e) {
        entry.error = e.what();
      } catch (const InputError& e) {
        entry.error = e.what();
      }
      for (MeasureKind kind : report.options.measures) {
        MeasureConfig cfg = options.measure;
        cfg.measure_kind = kind;
        cfg.mode = options.mode;
        entry.betas.emplace_back(kind, Bias(list, cfg));
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace serpbias
