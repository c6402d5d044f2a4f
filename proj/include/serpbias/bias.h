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

// Signed bias of a SERP and its per-engine aggregates.
//
// The bias of a list is the utility of the pro view minus the utility of the
// against view, so 0 means both views are served equally, a positive value
// favours pro and a negative value favours against. In ideology mode the
// conservative view plays pro and the liberal view plays against.

#ifndef SERPBIAS_BIAS_H_
#define SERPBIAS_BIAS_H_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "serpbias/model.h"
#include "serpbias/utility.h"

namespace serpbias {

template <typename Label>
double SignedBias(std::span<const std::type_identity_t<Label>> labels,
                  Label positive, Label negative, const MeasureConfig& cfg) {
  if (cfg.measure_kind == MeasureKind::kPrecision) {
    // Difference of counts over n, so that e.g. 6 pro and 4 against give
    // exactly 0.2.
    internal::CheckCutoff(cfg.cutoff);
    const std::size_t depth =
        std::min(labels.size(), static_cast<std::size_t>(cfg.cutoff));
    long balance = 0;
    for (std::size_t k = 0; k < depth; ++k) {
      if (labels[k] == positive) ++balance;
      if (labels[k] == negative) --balance;
    }
    return static_cast<double>(balance) / cfg.cutoff;
  }
  return Utility<Label>(labels, positive, cfg) -
         Utility<Label>(labels, negative, cfg);
}

// Stance bias of a bare label sequence.
double Bias(std::span<const StanceLabel> stances, const MeasureConfig& cfg);

// Ideological bias; positive means conservative-leaning.
double Bias(const IdeologyList& list, const MeasureConfig& cfg);

// Honours cfg.mode: in ideology mode the list is transformed first.
double Bias(const RankedList& list, const MeasureConfig& cfg);

// Tight upper bound of |Bias| for a list of list_len documents.
double BetaMax(MeasureKind kind, const MeasureConfig& cfg,
               std::size_t list_len);

struct BiasRecord {
  std::string query_id;
  MeasureKind measure_kind = MeasureKind::kPrecision;
  double beta = 0.0;
};

struct BiasSummary {
  std::string engine_id;
  MeasureKind measure_kind = MeasureKind::kPrecision;
  double mb = 0.0;   // mean of beta
  double mab = 0.0;  // mean of |beta|
  std::vector<BiasRecord> per_query;  // ordered by query id
};

// Arithmetic means in input order. Throw InputError on an empty sample.
double MeanBias(std::span<const double> betas);
double MeanAbsBias(std::span<const double> betas);

// Per-query betas of a run, ordered by query id. Empty SERPs give 0.
std::vector<double> QueryBiases(const EngineRun& run, const MeasureConfig& cfg);

// Throw InputError when the run has no queries.
double MeanBias(const EngineRun& run, const MeasureConfig& cfg);
double MeanAbsBias(const EngineRun& run, const MeasureConfig& cfg);

// MB, MAB and per-query records for cfg.measure_kind.
BiasSummary Summarize(const EngineRun& run, const MeasureConfig& cfg);

}  // namespace serpbias

#endif  // SERPBIAS_BIAS_H_
