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

#include "serpbias/report.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "json.hpp"
#include "serpbias/errors.h"

namespace serpbias {
namespace {

using nlohmann::json;

std::string Quote(std::string_view text) { return json(text).dump(); }

// Minimal pretty-printing writer; nlohmann::json cannot be told how many
// digits to print.
class JsonWriter {
 public:
  JsonWriter& BeginObject() { return Open('{'); }
  JsonWriter& EndObject() { return Close('}'); }
  JsonWriter& BeginArray() { return Open('['); }
  JsonWriter& EndArray() { return Close(']'); }

  JsonWriter& Key(std::string_view key) {
    Separate();
    out_ += Quote(key);
    out_ += ": ";
    after_key_ = true;
    return *this;
  }
  JsonWriter& String(std::string_view value) { return Raw(Quote(value)); }
  JsonWriter& Int(long long value) { return Raw(std::to_string(value)); }
  JsonWriter& Bool(bool value) { return Raw(value ? "true" : "false"); }
  JsonWriter& Null() { return Raw("null"); }
  JsonWriter& Number(double value) {
    return Raw(std::isfinite(value) ? FormatNumber(value)
                                    : Quote(FormatNumber(value)));
  }

  std::string Finish() {
    out_ += '\n';
    return std::move(out_);
  }

 private:
  struct Frame {
    bool empty = true;
  };

  void Separate() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (stack_.empty()) return;
    if (!stack_.back().empty) out_ += ',';
    stack_.back().empty = false;
    out_ += '\n';
    out_.append(2 * stack_.size(), ' ');
  }
  JsonWriter& Raw(std::string_view text) {
    Separate();
    out_ += text;
    return *this;
  }
  JsonWriter& Open(char bracket) {
    Separate();
    out_ += bracket;
    stack_.push_back({});
    return *this;
  }
  JsonWriter& Close(char bracket) {
    const bool empty = stack_.back().empty;
    stack_.pop_back();
    if (!empty) {
      out_ += '\n';
      out_.append(2 * stack_.size(), ' ');
    }
    out_ += bracket;
    return *this;
  }

  std::string out_;
  std::vector<Frame> stack_;
  bool after_key_ = false;
};

std::string_view ToString(TestStatus status) {
  return status == TestStatus::kOk ? "ok" : "degenerate";
}

void WriteTest(JsonWriter& w, const TestOutcome& test) {
  const TTestResult& r = test.result;
  w.Key("status").String(ToString(test.status));
  w.Key("t_stat").Number(r.t_stat);
  w.Key("df").Int(r.df);
  w.Key("p_value").Number(r.p_value);
  w.Key("sample_mean").Number(r.sample_mean);
  w.Key("std_err").Number(r.std_err);
  w.Key("reject_at");
  if (r.reject_at) {
    w.Number(*r.reject_at);
  } else {
    w.Null();
  }
}

std::string RenderJson(const ComparisonReport& report) {
  JsonWriter w;
  w.BeginObject();
  w.Key("config").BeginObject();
  w.Key("cutoff").Int(report.config.cutoff);
  w.Key("persistence").Number(report.config.persistence);
  w.Key("log_base").Number(report.config.log_base);
  w.Key("mode").String(ToString(report.config.mode));
  w.Key("measures").BeginArray();
  for (MeasureKind kind : report.config.measures) w.String(ToString(kind));
  w.EndArray();
  w.Key("alpha").Number(report.config.alpha);
  w.EndObject();

  w.Key("statistics_skipped").Bool(report.statistics_skipped);
  w.Key("warnings").BeginArray();
  for (const std::string& warning : report.warnings) w.String(warning);
  w.EndArray();

  w.Key("engines").BeginArray();
  for (const BiasSummary& s : report.summaries) {
    w.BeginObject();
    w.Key("engine").String(s.engine_id);
    w.Key("measure").String(ToString(s.measure_kind));
    w.Key("mb").Number(s.mb);
    w.Key("mab").Number(s.mab);
    w.Key("per_query").BeginArray();
    for (const BiasRecord& r : s.per_query) {
      w.BeginObject();
      w.Key("query_id").String(r.query_id);
      w.Key("beta").Number(r.beta);
      w.EndObject();
    }
    w.EndArray();
    w.EndObject();
  }
  w.EndArray();

  w.Key("one_sample").BeginArray();
  for (const OneSampleEntry& e : report.one_sample) {
    w.BeginObject();
    w.Key("engine").String(e.engine_id);
    w.Key("measure").String(ToString(e.measure));
    WriteTest(w, e.test);
    w.EndObject();
  }
  w.EndArray();

  w.Key("paired").BeginArray();
  for (const PairedEntry& e : report.paired) {
    w.BeginObject();
    w.Key("engine_a").String(e.engine_a);
    w.Key("engine_b").String(e.engine_b);
    w.Key("measure").String(ToString(e.measure));
    WriteTest(w, e.test);
    w.EndObject();
  }
  w.EndArray();
  w.EndObject();
  return w.Finish();
}

std::string TsvRow(std::initializer_list<std::string_view> cells) {
  std::string row;
  bool first = true;
  for (std::string_view cell : cells) {
    if (!first) row += '\t';
    first = false;
    row += cell;
  }
  row += '\n';
  return row;
}

void TsvTest(std::string& out, std::string_view section, std::string_view a,
             std::string_view b, std::string_view measure,
             const TestOutcome& test) {
  const TTestResult& r = test.result;
  auto row = [&](std::string_view field, const std::string& value) {
    out += TsvRow({section, a, b, measure, "", field, value});
  };
  row("status", std::string(ToString(test.status)));
  row("t_stat", FormatNumber(r.t_stat));
  row("df", std::to_string(r.df));
  row("p_value", FormatNumber(r.p_value));
  row("sample_mean", FormatNumber(r.sample_mean));
  row("std_err", FormatNumber(r.std_err));
  row("reject_at", r.reject_at ? FormatNumber(*r.reject_at) : "");
}

std::string RenderTsv(const ComparisonReport& report) {
  std::string out = TsvRow(
      {"section", "engine", "engine_b", "measure", "query_id", "field", "value"});
  auto config = [&](std::string_view field, const std::string& value) {
    out += TsvRow({"config", "", "", "", "", field, value});
  };
  config("cutoff", std::to_string(report.config.cutoff));
  config("persistence", FormatNumber(report.config.persistence));
  config("log_base", FormatNumber(report.config.log_base));
  config("mode", std::string(ToString(report.config.mode)));
  std::string measures;
  for (MeasureKind kind : report.config.measures) {
    if (!measures.empty()) measures += ',';
    measures += ToString(kind);
  }
  config("measures", measures);
  config("alpha", FormatNumber(report.config.alpha));
  config("statistics_skipped", report.statistics_skipped ? "true" : "false");
  for (const std::string& warning : report.warnings) {
    out += TsvRow({"warning", "", "", "", "", "message", warning});
  }
  for (const BiasSummary& s : report.summaries) {
    const std::string_view measure = ToString(s.measure_kind);
    out += TsvRow({"summary", s.engine_id, "", measure, "", "mb", FormatNumber(s.mb)});
    out += TsvRow({"summary", s.engine_id, "", measure, "", "mab", FormatNumber(s.mab)});
    for (const BiasRecord& r : s.per_query) {
      out += TsvRow({"beta", s.engine_id, "", measure, r.query_id, "beta",
                     FormatNumber(r.beta)});
    }
  }
  for (const OneSampleEntry& e : report.one_sample) {
    TsvTest(out, "one_sample", e.engine_id, "", ToString(e.measure), e.test);
  }
  for (const PairedEntry& e : report.paired) {
    TsvTest(out, "paired", e.engine_a, e.engine_b, ToString(e.measure), e.test);
  }
  return out;
}

std::string Short(double value) {
  if (!std::isfinite(value)) return FormatNumber(value);
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::string MarkdownEscape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string Significance(const TestOutcome& test) {
  return test.result.reject_at ? "yes" : "no";
}

std::string RenderMarkdown(const ComparisonReport& report) {
  std::string out = "# Search bias report\n\n";
  out += "| parameter | value |\n|---|---|\n";
  out += "| mode | " + std::string(ToString(report.config.mode)) + " |\n";
  out += "| cutoff | " + std::to_string(report.config.cutoff) + " |\n";
  out += "| persistence | " + Short(report.config.persistence) + " |\n";
  out += "| log base | " + Short(report.config.log_base) + " |\n";
  out += "| alpha | " + Short(report.config.alpha) + " |\n";

  if (!report.warnings.empty()) {
    out += "\n## Warnings\n\n";
    for (const std::string& w : report.warnings) out += "- " + w + "\n";
  }

  out += "\n## Mean bias per engine\n\n";
  if (report.summaries.empty()) {
    out += "_none_\n";
  } else {
    out += "| engine | measure | MB | MAB |\n|---|---|---|---|\n";
    for (const BiasSummary& s : report.summaries) {
      out += "| " + MarkdownEscape(s.engine_id) + " | " +
             std::string(ToString(s.measure_kind)) + " | " + Short(s.mb) +
             " | " + Short(s.mab) + " |\n";
    }
  }

  out += "\n## One-sample t-tests (H0: mean bias = 0)\n\n";
  if (report.one_sample.empty()) {
    out += "_none_\n";
  } else {
    out += "| engine | measure | t | df | p | significant |\n"
           "|---|---|---|---|---|---|\n";
    for (const OneSampleEntry& e : report.one_sample) {
      const TTestResult& r = e.test.result;
      out += "| " + MarkdownEscape(e.engine_id) + " | " +
             std::string(ToString(e.measure)) + " | " + Short(r.t_stat) +
             " | " + std::to_string(r.df) + " | " + Short(r.p_value) + " | " +
             Significance(e.test) + " |\n";
    }
  }

  out += "\n## Paired t-tests (H0: equal mean bias)\n\n";
  if (report.paired.empty()) {
    out += "_none_\n";
  } else {
    out += "| engine A | engine B | measure | mean difference | t | df | p | "
           "significant |\n|---|---|---|---|---|---|---|---|\n";
    for (const PairedEntry& e : report.paired) {
      const TTestResult& r = e.test.result;
      out += "| " + MarkdownEscape(e.engine_a) + " | " +
             MarkdownEscape(e.engine_b) + " | " +
             std::string(ToString(e.measure)) + " | " + Short(r.sample_mean) +
             " | " + Short(r.t_stat) + " | " + std::to_string(r.df) + " | " +
             Short(r.p_value) + " | " + Significance(e.test) + " |\n";
    }
  }

  out += "\n## Bias per query\n\n";
  if (report.summaries.empty()) {
    out += "_none_\n";
  } else {
    out += "| engine | measure | query | beta |\n|---|---|---|---|\n";
    for (const BiasSummary& s : report.summaries) {
      for (const BiasRecord& r : s.per_query) {
        out += "| " + MarkdownEscape(s.engine_id) + " | " +
               std::string(ToString(s.measure_kind)) + " | " +
               MarkdownEscape(r.query_id) + " | " + Short(r.beta) + " |\n";
      }
    }
  }
  return out;
}

// Parsing helpers for ParseReportJson.

double ReadNumber(const json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw InputError("report: expected a number, got " + value.dump());
}

MeasureKind ReadMeasure(const json& value) {
  const auto kind = ParseMeasureKind(value.get<std::string>());
  if (!kind) throw InputError("report: unknown measure " + value.dump());
  return *kind;
}

TestOutcome ReadTest(const json& entry) {
  TestOutcome test;
  const std::string status = entry.at("status").get<std::string>();
  if (status == "ok") {
    test.status = TestStatus::kOk;
  } else if (status == "degenerate") {
    test.status = TestStatus::kDegenerate;
  } else {
    throw InputError("report: unknown test status '" + status + "'");
  }
  test.result.t_stat = ReadNumber(entry.at("t_stat"));
  test.result.df = entry.at("df").get<int>();
  test.result.p_value = ReadNumber(entry.at("p_value"));
  test.result.sample_mean = ReadNumber(entry.at("sample_mean"));
  test.result.std_err = ReadNumber(entry.at("std_err"));
  if (!entry.at("reject_at").is_null()) {
    test.result.reject_at = ReadNumber(entry.at("reject_at"));
  }
  return test;
}

std::string RenderBaselineJson(const BaselineReport& report) {
  const BaselineOptions& o = report.options;
  JsonWriter w;
  w.BeginObject();
  w.Key("config").BeginObject();
  w.Key("baseline").String(ToString(o.baseline.kind));
  w.Key("step").Int(o.baseline.step);
  w.Key("mode").String(ToString(o.mode));
  w.Key("protected").String(o.protected_label);
  w.Key("unprotected").String(o.unprotected_label);
  w.Key("cutoff").Int(o.measure.cutoff);
  w.Key("persistence").Number(o.measure.persistence);
  w.Key("log_base").Number(o.measure.log_base);
  w.EndObject();
  w.Key("entries").BeginArray();
  for (const BaselineEntry& e : report.entries) {
    w.BeginObject();
    w.Key("engine").String(e.engine_id);
    w.Key("query_id").String(e.query_id);
    w.Key("score");
    if (e.score) {
      w.Number(*e.score);
    } else {
      w.Null();
    }
    w.Key("error").String(e.error);
    w.Key("betas").BeginObject();
    for (const auto& [kind, beta] : e.betas) w.Key(ToString(kind)).Number(beta);
    w.EndObject();
    w.EndObject();
  }
  w.EndArray();
  w.EndObject();
  return w.Finish();
}

std::string RenderBaselineTsv(const BaselineReport& report) {
  std::string out = "engine\tquery_id\t" +
                    std::string(ToString(report.options.baseline.kind));
  for (MeasureKind kind : report.options.measures) {
    out += "\tbeta_";
    out += ToString(kind);
  }
  out += "\terror\n";
  for (const BaselineEntry& e : report.entries) {
    out += e.engine_id + '\t' + e.query_id + '\t' +
           (e.score ? FormatNumber(*e.score) : "");
    for (const auto& [kind, beta] : e.betas) out += '\t' + FormatNumber(beta);
    out += '\t' + e.error + '\n';
  }
  return out;
}

std::string RenderBaselineMarkdown(const BaselineReport& report) {
  const BaselineOptions& o = report.options;
  const std::string name(ToString(o.baseline.kind));
  std::string out = "# Fairness baseline report\n\n";
  out += "| parameter | value |\n|---|---|\n";
  out += "| baseline | " + name + " |\n";
  out += "| step | " + std::to_string(o.baseline.step) + " |\n";
  out += "| mode | " + std::string(ToString(o.mode)) + " |\n";
  out += "| protected group | " + o.protected_label + " |\n";
  out += "| unprotected group | " + o.unprotected_label + " |\n\n";
  if (report.entries.empty()) return out + "_none_\n";
  out += "| engine | query | " + name + " |";
  std::string rule = "|---|---|---|";
  for (MeasureKind kind : o.measures) {
    out += " beta " + std::string(ToString(kind)) + " |";
    rule += "---|";
  }
  out += " note |\n" + rule + "---|\n";
  for (const BaselineEntry& e : report.entries) {
    out += "| " + MarkdownEscape(e.engine_id) + " | " +
           MarkdownEscape(e.query_id) + " | " +
           (e.score ? Short(*e.score) : "n/a") + " |";
    for (const auto& [kind, beta] : e.betas) out += " " + Short(beta) + " |";
    out += " " + MarkdownEscape(e.error) + " |\n";
  }
  return out;
}

}  // namespace

std::optional<OutputFormat> ParseOutputFormat(std::string_view text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "tsv") return OutputFormat::kTsv;
  if (text == "markdown" || text == "md") return OutputFormat::kMarkdown;
  return std::nullopt;
}

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string RenderReport(const ComparisonReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return RenderJson(report);
    case OutputFormat::kTsv:
      return RenderTsv(report);
    case OutputFormat::kMarkdown:
      return RenderMarkdown(report);
  }
  return "";
}

ComparisonReport ParseReportJson(std::string_view text) {
  ComparisonReport report;
  try {
    const json root = json::parse(text);
    const json& config = root.at("config");
    report.config.cutoff = config.at("cutoff").get<int>();
    report.config.persistence = ReadNumber(config.at("persistence"));
    report.config.log_base = ReadNumber(config.at("log_base"));
    const auto mode = ParseEvaluationMode(config.at("mode").get<std::string>());
    if (!mode) throw InputError("report: unknown mode");
    report.config.mode = *mode;
    for (const json& m : config.at("measures")) {
      report.config.measures.push_back(ReadMeasure(m));
    }
    report.config.alpha = ReadNumber(config.at("alpha"));
    report.statistics_skipped = root.at("statistics_skipped").get<bool>();
    for (const json& w : root.at("warnings")) {
      report.warnings.push_back(w.get<std::string>());
    }
    for (const json& e : root.at("engines")) {
      BiasSummary s;
      s.engine_id = e.at("engine").get<std::string>();
      s.measure_kind = ReadMeasure(e.at("measure"));
      s.mb = ReadNumber(e.at("mb"));
      s.mab = ReadNumber(e.at("mab"));
      for (const json& r : e.at("per_query")) {
        s.per_query.push_back({r.at("query_id").get<std::string>(),
                               s.measure_kind, ReadNumber(r.at("beta"))});
      }
      report.summaries.push_back(std::move(s));
    }
    for (const json& e : root.at("one_sample")) {
      report.one_sample.push_back({e.at("engine").get<std::string>(),
                                   ReadMeasure(e.at("measure")), ReadTest(e)});
    }
    for (const json& e : root.at("paired")) {
      report.paired.push_back({e.at("engine_a").get<std::string>(),
                               e.at("engine_b").get<std::string>(),
                               ReadMeasure(e.at("measure")), ReadTest(e)});
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
  return report;
}

std::string RenderBaselineReport(const BaselineReport& report,
                                 OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return RenderBaselineJson(report);
    case OutputFormat::kTsv:
      return RenderBaselineTsv(report);
    case OutputFormat::kMarkdown:
      return RenderBaselineMarkdown(report);
  }
  return "";
}

}  // namespace serpbias
