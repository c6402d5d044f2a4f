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

// Label vocabularies and the SERP data model.
//
// A RankedList is one search engine result page: the documents an engine
// returned for one query, each carrying a crowd-resolved stance label. An
// EngineRun bundles the lists of one engine over a query set.

#ifndef SERPBIAS_MODEL_H_
#define SERPBIAS_MODEL_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace serpbias {

// Stance of a document towards the topic of the query it was retrieved for.
enum class StanceLabel : std::uint8_t { kPro, kNeutral, kAgainst, kNotRelevant };

// Ideological leaning of a query topic: the side whose policies favour it.
enum class LeaningLabel : std::uint8_t { kConservative, kLiberal, kBothOrNeither };

// Ideology a document is biased towards, derived from its stance and the
// leaning of its query.
enum class IdeologyLabel : std::uint8_t {
  kConservative,
  kLiberal,
  kNeutral,
  kNotRelevant,
  kExcluded,
};

inline constexpr std::array<StanceLabel, 4> kAllStances = {
    StanceLabel::kPro, StanceLabel::kNeutral, StanceLabel::kAgainst,
    StanceLabel::kNotRelevant};
inline constexpr std::array<LeaningLabel, 3> kAllLeanings = {
    LeaningLabel::kConservative, LeaningLabel::kLiberal,
    LeaningLabel::kBothOrNeither};

std::string_view ToString(StanceLabel label);
std::string_view ToString(LeaningLabel label);
std::string_view ToString(IdeologyLabel label);

// Accepts the rendered forms. "not_relevant" is accepted as an alias of
// "not-relevant".
std::optional<StanceLabel> ParseStance(std::string_view text);
std::optional<LeaningLabel> ParseLeaning(std::string_view text);
std::optional<IdeologyLabel> ParseIdeology(std::string_view text);

// Total mapping. Pro on a topic favours the side the topic belongs to,
// against favours the opposite side. Pro/against documents of
// both_or_neither queries have no side and map to kExcluded.
IdeologyLabel TransformStanceToIdeology(LeaningLabel leaning,
                                        StanceLabel stance);

// pro <-> against; neutral and not-relevant are fixed points.
StanceLabel MirrorStance(StanceLabel stance);

struct Document {
  int rank = 1;
  StanceLabel stance = StanceLabel::kNotRelevant;
  std::string doc_id;

  bool operator==(const Document&) const = default;
};

// An immutable, validated SERP. Ranks are contiguous 1..size() and doc ids
// are unique. Empty lists are valid.
class RankedList {
 public:
  RankedList() = default;

  // Throws InputError when ranks are not exactly 1..n in order or a doc id
  // repeats.
  RankedList(std::string engine_id, std::string query_id, LeaningLabel leaning,
             std::vector<Document> docs);

  // Builds a list from a bare label sequence; doc ids are "d1", "d2", ...
  static RankedList FromStances(
      const std::vector<StanceLabel>& stances,
      LeaningLabel leaning = LeaningLabel::kBothOrNeither,
      std::string engine_id = "", std::string query_id = "");

  const std::string& engine_id() const { return engine_id_; }
  const std::string& query_id() const { return query_id_; }
  LeaningLabel leaning() const { return leaning_; }
  const std::vector<Document>& docs() const { return docs_; }
  std::size_t size() const { return docs_.size(); }
  bool empty() const { return docs_.empty(); }

  // Stance of each document in rank order.
  std::vector<StanceLabel> Stances() const;

  bool operator==(const RankedList&) const = default;

 private:
  std::string engine_id_;
  std::string query_id_;
  LeaningLabel leaning_ = LeaningLabel::kBothOrNeither;
  std::vector<Document> docs_;
};

struct IdeologyDocument {
  int rank = 1;
  IdeologyLabel ideology = IdeologyLabel::kNotRelevant;
  std::string doc_id;

  bool operator==(const IdeologyDocument&) const = default;
};

// A RankedList whose stances were replaced by ideologies. Produced only by
// TransformList, so it never contains kExcluded.
struct IdeologyList {
  std::string engine_id;
  std::string query_id;
  LeaningLabel leaning = LeaningLabel::kBothOrNeither;
  std::vector<IdeologyDocument> docs;

  std::size_t size() const { return docs.size(); }
  std::vector<IdeologyLabel> Ideologies() const;
};

// Element-wise TransformStanceToIdeology. Excluded documents are relabeled
// not-relevant so that every rank position is kept.
IdeologyList TransformList(const RankedList& list);

// Swaps pro and against on every document. Involution.
RankedList Mirror(const RankedList& list);

// All lists of one engine, keyed (and therefore ordered) by query id.
class EngineRun {
 public:
  EngineRun() = default;

  // Throws InputError when a list belongs to another engine or a query id
  // repeats.
  EngineRun(std::string engine_id, std::vector<RankedList> lists);

  const std::string& engine_id() const { return engine_id_; }
  const std::map<std::string, RankedList>& lists() const { return lists_; }
  std::size_t num_queries() const { return lists_.size(); }

 private:
  std::string engine_id_;
  std::map<std::string, RankedList> lists_;
};

}  // namespace serpbias

#endif  // SERPBIAS_MODEL_H_
