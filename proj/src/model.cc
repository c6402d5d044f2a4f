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

#include "serpbias/model.h"

#include <set>
#include <utility>

#include "serpbias/errors.h"

namespace serpbias {

std::string_view ToString(StanceLabel label) {
  switch (label) {
    case StanceLabel::kPro:
      return "pro";
    case StanceLabel::kNeutral:
      return "neutral";
    case StanceLabel::kAgainst:
      return "against";
    case StanceLabel::kNotRelevant:
      return "not-relevant";
  }
  return "";
}

std::string_view ToString(LeaningLabel label) {
  switch (label) {
    case LeaningLabel::kConservative:
      return "conservative";
    case LeaningLabel::kLiberal:
      return "liberal";
    case LeaningLabel::kBothOrNeither:
      return "both_or_neither";
  }
  return "";
}

std::string_view ToString(IdeologyLabel label) {
  switch (label) {
    case IdeologyLabel::kConservative:
      return "conservative";
    case IdeologyLabel::kLiberal:
      return "liberal";
    case IdeologyLabel::kNeutral:
      return "neutral";
    case IdeologyLabel::kNotRelevant:
      return "not-relevant";
    case IdeologyLabel::kExcluded:
      return "excluded";
  }
  return "";
}

std::optional<StanceLabel> ParseStance(std::string_view text) {
  for (StanceLabel label : kAllStances) {
    if (text == ToString(label)) return label;
  }
  if (text == "not_relevant") return StanceLabel::kNotRelevant;
  return std::nullopt;
}

std::optional<LeaningLabel> ParseLeaning(std::string_view text) {
  for (LeaningLabel label : kAllLeanings) {
    if (text == ToString(label)) return label;
  }
  return std::nullopt;
}

std::optional<IdeologyLabel> ParseIdeology(std::string_view text) {
  for (IdeologyLabel label :
       {IdeologyLabel::kConservative, IdeologyLabel::kLiberal,
        IdeologyLabel::kNeutral, IdeologyLabel::kNotRelevant,
        IdeologyLabel::kExcluded}) {
    if (text == ToString(label)) return label;
  }
  if (text == "not_relevant") return IdeologyLabel::kNotRelevant;
  return std::nullopt;
}

IdeologyLabel TransformStanceToIdeology(LeaningLabel leaning,
                                        StanceLabel stance) {
  switch (stance) {
    case StanceLabel::kNeutral:
      return IdeologyLabel::kNeutral;
    case StanceLabel::kNotRelevant:
      return IdeologyLabel::kNotRelevant;
    case StanceLabel::kPro:
    case StanceLabel::kAgainst:
      break;
  }
  const bool pro = stance == StanceLabel::kPro;
  switch (leaning) {
    case LeaningLabel::kConservative:
      return pro ? IdeologyLabel::kConservative : IdeologyLabel::kLiberal;
    case LeaningLabel::kLiberal:
      return pro ? IdeologyLabel::kLiberal : IdeologyLabel::kConservative;
    case LeaningLabel::kBothOrNeither:
      return IdeologyLabel::kExcluded;
  }
  return IdeologyLabel::kExcluded;
}

StanceLabel MirrorStance(StanceLabel stance) {
  switch (stance) {
    case StanceLabel::kPro:
      return StanceLabel::kAgainst;
    case StanceLabel::kAgainst:
      return StanceLabel::kPro;
    default:
      return stance;
  }
}

RankedList::RankedList(std::string engine_id, std::string query_id,
                       LeaningLabel leaning, std::vector<Document> docs)
    : engine_id_(std::move(engine_id)),
      query_id_(std::move(query_id)),
      leaning_(leaning),
      docs_(std::move(docs)) {
  std::set<std::string_view> seen;
  for (std::size_t k = 0; k < docs_.size(); ++k) {
    const int expected = static_cast<int>(k) + 1;
    if (docs_[k].rank != expected) {
      throw InputError("engine '" + engine_id_ + "' query '" + query_id_ +
                       "': expected rank " + std::to_string(expected) +
                       " at position " + std::to_string(expected) +
                       ", found rank " + std::to_string(docs_[k].rank));
    }
    if (!seen.insert(docs_[k].doc_id).second) {
      throw InputError("engine '" + engine_id_ + "' query '" + query_id_ +
                       "': duplicate doc_id '" + docs_[k].doc_id + "'");
    }
  }
}

RankedList RankedList::FromStances(const std::vector<StanceLabel>& stances,
                                   LeaningLabel leaning, std::string engine_id,
                                   std::string query_id) {
  std::vector<Document> docs;
  docs.reserve(stances.size());
  for (std::size_t k = 0; k < stances.size(); ++k) {
    docs.push_back({static_cast<int>(k) + 1, stances[k],
                    "d" + std::to_string(k + 1)});
  }
  return RankedList(std::move(engine_id), std::move(query_id), leaning,
                    std::move(docs));
}

std::vector<StanceLabel> RankedList::Stances() const {
  std::vector<StanceLabel> out;
  out.reserve(docs_.size());
  for (const Document& doc : docs_) out.push_back(doc.stance);
  return out;
}

std::vector<IdeologyLabel> IdeologyList::Ideologies() const {
  std::vector<IdeologyLabel> out;
  out.reserve(docs.size());
  for (const IdeologyDocument& doc : docs) out.push_back(doc.ideology);
  return out;
}

IdeologyList TransformList(const RankedList& list) {
  IdeologyList out{list.engine_id(), list.query_id(), list.leaning(), {}};
  out.docs.reserve(list.size());
  for (const Document& doc : list.docs()) {
    IdeologyLabel ideology = TransformStanceToIdeology(list.leaning(), doc.stance);
    if (ideology == IdeologyLabel::kExcluded) {
      ideology = IdeologyLabel::kNotRelevant;
    }
    out.docs.push_back({doc.rank, ideology, doc.doc_id});
  }
  return out;
}

RankedList Mirror(const RankedList& list) {
  std::vector<Document> docs = list.docs();
  for (Document& doc : docs) doc.stance = MirrorStance(doc.stance);
  return RankedList(list.engine_id(), list.query_id(), list.leaning(),
                    std::move(docs));
}

EngineRun::EngineRun(std::string engine_id, std::vector<RankedList> lists)
    : engine_id_(std::move(engine_id)) {
  for (RankedList& list : lists) {
    if (list.engine_id() != engine_id_) {
      throw InputError("list for query '" + list.query_id() +
                       "' belongs to engine '" + list.engine_id() +
                       "', not '" + engine_id_ + "'");
    }
    std::string query_id = list.query_id();
    auto [it, inserted] = lists_.emplace(query_id, std::move(list));
    if (!inserted) {
      throw InputError("engine '" + engine_id_ + "': duplicate query '" +
                       query_id + "'");
    }
  }
}

}  // namespace serpbias
