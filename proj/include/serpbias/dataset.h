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

// Line-delimited JSON ingestion. Each non-blank line holds one SERP:
//
//   {"engine": "bing", "query_id": "q01", "query": "abortion",
//    "leaning": "liberal",
//    "docs": [{"rank": 1, "doc_id": "u1", "stance": "pro"}, ...]}
//
// leaning is one of conservative, liberal, both_or_neither; stance is one of
// pro, neutral, against, not-relevant. Documents may appear in any order but
// their ranks must be exactly 1..n. Lists are not truncated.

#ifndef SERPBIAS_DATASET_H_
#define SERPBIAS_DATASET_H_

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "serpbias/model.h"

namespace serpbias {

struct QueryInfo {
  std::string text;
  LeaningLabel leaning = LeaningLabel::kBothOrNeither;

  bool operator==(const QueryInfo&) const = default;
};

// Every run covers the same query ids; runs are ordered by engine id.
struct Dataset {
  std::vector<EngineRun> runs;
  std::map<std::string, QueryInfo> queries;

  std::size_t num_documents() const;
};

// Throws InputError naming the offending line for malformed JSON, missing or
// mistyped fields, unknown labels, rank gaps, duplicate (engine, query)
// pairs and inconsistent query metadata; and naming the engine when query
// sets differ across engines.
Dataset ParseDataset(std::istream& in);
Dataset ParseDataset(std::string_view text);

// Inverse of ParseDataset: one line per (engine, query), sorted.
std::string SerializeDataset(const Dataset& dataset);

}  // namespace serpbias

#endif  // SERPBIAS_DATASET_H_
