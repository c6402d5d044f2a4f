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

#include "serpbias/dataset.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "serpbias/errors.h"

namespace serpbias {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(std::size_t line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

const json& Field(const json& record, const char* name, std::size_t line) {
  auto it = record.find(name);
  if (it == record.end()) Fail(line, std::string("missing field '") + name + "'");
  return *it;
}

std::string StringField(const json& record, const char* name,
                        std::size_t line) {
  const json& value = Field(record, name, line);
  if (!value.is_string()) {
    Fail(line, std::string("field '") + name + "' must be a string");
  }
  return value.get<std::string>();
}

struct Record {
  std::size_t line;
  std::string engine;
  std::string query_id;
  QueryInfo query;
  std::vector<Document> docs;
};

Record ParseRecord(std::string_view text, std::size_t line) {
  json record;
  try {
    record = json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(line, std::string("malformed JSON: ") + e.what());
  }
  if (!record.is_object()) Fail(line, "record must be a JSON object");

  Record out;
  out.line = line;
  out.engine = StringField(record, "engine", line);
  out.query_id = StringField(record, "query_id", line);
  out.query.text = StringField(record, "query", line);
  const std::string leaning = StringField(record, "leaning", line);
  const auto parsed_leaning = ParseLeaning(leaning);
  if (!parsed_leaning) Fail(line, "unknown leaning '" + leaning + "'");
  out.query.leaning = *parsed_leaning;
  if (out.engine.empty()) Fail(line, "empty engine");
  if (out.query_id.empty()) Fail(line, "empty query_id");

  const json& docs = Field(record, "docs", line);
  if (!docs.is_array()) Fail(line, "field 'docs' must be an array");
  for (const json& doc : docs) {
    if (!doc.is_object()) Fail(line, "each doc must be a JSON object");
    const json& rank = Field(doc, "rank", line);
    if (!rank.is_number_integer()) Fail(line, "doc rank must be an integer");
    const std::string stance = StringField(doc, "stance", line);
    const auto parsed_stance = ParseStance(stance);
    if (!parsed_stance) Fail(line, "unknown stance '" + stance + "'");
    out.docs.push_back({rank.get<int>(), *parsed_stance,
                        StringField(doc, "doc_id", line)});
  }

  std::stable_sort(out.docs.begin(), out.docs.end(),
                   [](const Document& a, const Document& b) {
                     return a.rank < b.rank;
                   });
  for (std::size_t k = 0; k < out.docs.size(); ++k) {
    const int expected = static_cast<int>(k) + 1;
    const int rank = out.docs[k].rank;
    if (rank == expected) continue;
    if (rank < expected) {
      Fail(line, "rank " + std::to_string(rank) +
                     (rank < 1 ? " is not positive" : " appears twice"));
    }
    Fail(line, "rank gap: rank " + std::to_string(expected) +
                   " is missing before rank " + std::to_string(rank));
  }
  std::set<std::string_view> ids;
  for (const Document& doc : out.docs) {
    if (!ids.insert(doc.doc_id).second) {
      Fail(line, "duplicate doc_id '" + doc.doc_id + "'");
    }
  }
  return out;
}

Dataset Assemble(std::vector<Record> records) {
  if (records.empty()) throw InputError("no records");

  Dataset dataset;
  std::map<std::string, std::size_t> query_line;
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  std::map<std::string, std::vector<RankedList>> by_engine;
  for (Record& record : records) {
    auto [it, fresh] =
        seen.emplace(std::make_pair(record.engine, record.query_id), record.line);
    if (!fresh) {
      Fail(record.line, "duplicate record for engine '" + record.engine +
                            "' and query '" + record.query_id +
                            "' (first seen on line " +
                            std::to_string(it->second) + ")");
    }
    auto [q, new_query] = dataset.queries.emplace(record.query_id, record.query);
    if (new_query) {
      query_line[record.query_id] = record.line;
    } else if (!(q->second == record.query)) {
      Fail(record.line, "query '" + record.query_id +
                            "' has different text or leaning than on line " +
                            std::to_string(query_line[record.query_id]));
    }
    by_engine[record.engine].emplace_back(record.engine, record.query_id,
                                          record.query.leaning,
                                          std::move(record.docs));
  }

  for (auto& [engine, lists] : by_engine) {
    if (lists.size() != dataset.queries.size()) {
      std::set<std::string> covered;
      for (const RankedList& list : lists) covered.insert(list.query_id());
      for (const auto& [query_id, info] : dataset.queries) {
        if (!covered.count(query_id)) {
          throw InputError("engine '" + engine + "' has no record for query '" +
                           query_id + "'; all engines must share one query set");
        }
      }
    }
    dataset.runs.emplace_back(engine, std::move(lists));
  }
  return dataset;
}

}  // namespace

std::size_t Dataset::num_documents() const {
  std::size_t total = 0;
  for (const EngineRun& run : runs) {
    for (const auto& [query_id, list] : run.lists()) total += list.size();
  }
  return total;
}

Dataset ParseDataset(std::istream& in) {
  std::vector<Record> records;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    records.push_back(ParseRecord(line, number));
  }
  if (in.bad()) throw InputError("read error");
  return Assemble(std::move(records));
}

Dataset ParseDataset(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseDataset(in);
}

std::string SerializeDataset(const Dataset& dataset) {
  std::string out;
  for (const EngineRun& run : dataset.runs) {
    for (const auto& [query_id, list] : run.lists()) {
      const QueryInfo& info = dataset.queries.at(query_id);
      json docs = json::array();
      for (const Document& doc : list.docs()) {
        docs.push_back({{"rank", doc.rank},
                        {"doc_id", doc.doc_id},
                        {"stance", std::string(ToString(doc.stance))}});
      }
      json record = {{"engine", run.engine_id()},
                     {"query_id", query_id},
                     {"query", info.text},
                     {"leaning", std::string(ToString(info.leaning))},
                     {"docs", std::move(docs)}};
      out += record.dump();
      out += '\n';
    }
  }
  return out;
}

}  // namespace serpbias
