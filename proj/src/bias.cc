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

#include "serpbias/bias.h"

#include <algorithm>
#include <cmath>

#include "serpbias/errors.h"

namespace serpbias {

double Bias(std::span<const StanceLabel> stances, const MeasureConfig& cfg) {
  cfg.Validate();
  return SignedBias<StanceLabel>(stances, StanceLabel::kPro,
                                 StanceLabel::kAgainst, cfg);
}

double Bias(const IdeologyList& list, const MeasureConfig& cfg) {
  cfg.Validate();
  const std::vector<IdeologyLabel> labels = list.Ideologies();
  return SignedBias<IdeologyLabel>(labels, IdeologyLabel::kConservative,
                                   IdeologyLabel::kLiberal, cfg);
}

double Bias(const RankedList& list, const MeasureConfig& cfg) {
  if (cfg.mode == EvaluationMode::kIdeology) {
    return Bias(TransformList(list), cfg);
  }
  const std::vector<StanceLabel> stances = list.Stances();
  return Bias(std::span<const StanceLabel>(stances), cfg);
}

double BetaMax(MeasureKind kind, const MeasureConfig& cfg,
               std::size_t list_len) {
  cfg.Validate();
  switch (kind) {
    case MeasureKind::kPrecision:
      return 1.0;
    case MeasureKind::kRbp:
      return 1.0 - std::pow(cfg.persistence, static_cast<double>(list_len));
    case MeasureKind::kDcg: {
      const std::size_t depth =
          std::min(list_len, static_cast<std::size_t>(cfg.cutoff));
      double sum = 0.0;
      for (std::size_t i = 1; i <= depth; ++i) {
        sum += std::log(cfg.log_base) / std::log(static_cast<double>(i + 1));
      }
      return sum;
    }
  }
  return 0.0;
}

double MeanBias(std::span<const double> betas) {
  if (betas.empty()) throw InputError("mean bias of an empty query set");
  double sum = 0.0;
  for (double b : betas) sum += b;
  return sum / static_cast<double>(betas.size());
}

double MeanAbsBias(std::span<const double> betas) {
  if (betas.empty()) throw InputError("mean absolute bias of an empty query set");
  double sum = 0.0;
  for (double b : betas) sum += std::abs(b);
  return sum / static_cast<double>(betas.size());
}

std::vector<double> QueryBiases(const EngineRun& run, const MeasureConfig& cfg) {
  std::vector<double> betas;
  betas.reserve(run.num_queries());
  for (const auto& [query_id, list] : run.lists()) {
    betas.push_back(Bias(list, cfg));
  }
  return betas;
}

double MeanBias(const EngineRun& run, const MeasureConfig& cfg) {
  if (run.num_queries() == 0) {
    throw InputError("engine '" + run.engine_id() + "' has no queries");
  }
  return MeanBias(QueryBiases(run, cfg));
}

double MeanAbsBias(const EngineRun& run, const MeasureConfig& cfg) {
  if (run.num_queries() == 0) {
    throw InputError("engine '" + run.engine_id() + "' has no queries");
  }
  return MeanAbsBias(QueryBiases(run, cfg));
}

BiasSummary Summarize(const EngineRun& run, const MeasureConfig& cfg) {
  if (run.num_queries() == 0) {
    throw InputError("engine '" + run.engine_id() + "' has no queries");
  }
  BiasSummary summary;
  summary.engine_id = run.engine_id();
  summary.measure_kind = cfg.measure_kind;
  std::vector<double> betas = QueryBiases(run, cfg);
  std::size_t k = 0;
  for (const auto& [query_id, list] : run.lists()) {
    summary.per_query.push_back({query_id, cfg.measure_kind, betas[k++]});
  }
  summary.mb = MeanBias(betas);
  summary.mab = MeanAbsBias(betas);
  return summary;
}

}  // namespace serpbias
