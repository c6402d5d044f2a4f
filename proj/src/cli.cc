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

#include "serpbias/cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "serpbias/dataset.h"
#include "serpbias/errors.h"
#include "serpbias/evaluation.h"
#include "serpbias/report.h"

namespace serpbias {
namespace {

struct Flags {
  std::string input;
  std::string measures = "p,rbp,dcg";
  int cutoff = 10;
  double persistence = 0.8;
  double log_base = 2.0;
  std::string mode = "stance";
  std::string baseline = "rnd";
  int step = 10;
  double alpha = 0.05;
  std::string output = "json";
  std::string protected_label;
  std::string unprotected_label;
};

void AddInput(CLI::App* cmd, Flags& f) {
  cmd->add_option("--input", f.input, "Line-delimited JSON dataset, '-' for stdin")
      ->required();
}

void AddMeasureFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--measures", f.measures, "Comma-separated subset of p,rbp,dcg")
      ->capture_default_str();
  cmd->add_option("--cutoff", f.cutoff, "Cutoff n for P@n and DCG@n")
      ->capture_default_str();
  cmd->add_option("--persistence", f.persistence, "RBP persistence p")
      ->capture_default_str();
  cmd->add_option("--log-base", f.log_base, "DCG discount log base")
      ->capture_default_str();
  cmd->add_option("--mode", f.mode, "stance or ideology")->capture_default_str();
  cmd->add_option("--output", f.output, "json, tsv or markdown")
      ->capture_default_str();
}

MeasureConfig ToMeasureConfig(const Flags& f) {
  MeasureConfig cfg;
  cfg.cutoff = f.cutoff;
  cfg.persistence = f.persistence;
  cfg.log_base = f.log_base;
  const auto mode = ParseEvaluationMode(f.mode);
  if (!mode) throw ConfigError("unknown mode '" + f.mode + "'");
  cfg.mode = *mode;
  cfg.Validate();
  return cfg;
}

std::vector<MeasureKind> ToMeasures(const std::string& text) {
  std::vector<MeasureKind> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto kind = ParseMeasureKind(item);
    if (!kind) throw ConfigError("unknown measure '" + item + "'");
    out.push_back(*kind);
  }
  if (out.empty()) throw ConfigError("no measures selected");
  return out;
}

OutputFormat ToFormat(const std::string& text) {
  const auto format = ParseOutputFormat(text);
  if (!format) throw ConfigError("unknown output format '" + text + "'");
  return *format;
}

Dataset LoadDataset(const std::string& path, std::istream& in) {
  if (path == "-") return ParseDataset(in);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return ParseDataset(file);
}

EvaluateOptions ToEvaluateOptions(const Flags& f) {
  EvaluateOptions options;
  options.measure = ToMeasureConfig(f);
  options.measures = ToMeasures(f.measures);
  options.alpha = f.alpha;
  options.Validate();
  return options;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantifies stance and ideological bias in ranked search results."};
  app.name("serpbias");
  app.require_subcommand(1);
  Flags f;

  CLI::App* validate = app.add_subcommand("validate", "Check a dataset and summarize it");
  AddInput(validate, f);

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Per-query bias, MB/MAB, one-sample and paired t-tests");
  AddInput(evaluate, f);
  AddMeasureFlags(evaluate, f);
  evaluate->add_option("--alpha", f.alpha, "Significance level")
      ->capture_default_str();

  CLI::App* compare = app.add_subcommand(
      "compare", "Paired t-tests between every pair of engines");
  AddInput(compare, f);
  AddMeasureFlags(compare, f);
  compare->add_option("--alpha", f.alpha, "Significance level")
      ->capture_default_str();

  CLI::App* baselines = app.add_subcommand(
      "baselines", "rND/rKL/rRD fairness scores next to the bias measures");
  AddInput(baselines, f);
  AddMeasureFlags(baselines, f);
  baselines->add_option("--baseline", f.baseline, "rnd, rkl or rrd")
      ->capture_default_str();
  baselines->add_option("--step", f.step, "Distance between evaluation points")
      ->capture_default_str();
  baselines->add_option("--protected", f.protected_label,
                        "Protected group label (default pro, or conservative "
                        "in ideology mode)");
  baselines->add_option("--unprotected", f.unprotected_label,
                        "Unprotected group label (default against, or liberal "
                        "in ideology mode)");

  std::vector<const char*> argv = {"serpbias"};
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "serpbias: error: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (validate->parsed()) {
      const Dataset dataset = LoadDataset(f.input, in);
      out << "ok: " << dataset.runs.size() << " engines, "
          << dataset.queries.size() << " queries, " << dataset.num_documents()
          << " documents\n";
      return kExitOk;
    }
    if (evaluate->parsed() || compare->parsed()) {
      const EvaluateOptions options = ToEvaluateOptions(f);
      const OutputFormat format = ToFormat(f.output);
      const Dataset dataset = LoadDataset(f.input, in);
      ComparisonReport report = Evaluate(dataset, options);
      if (compare->parsed()) {
        if (dataset.runs.size() < 2) {
          throw InputError("compare needs at least 2 engines, found " +
                           std::to_string(dataset.runs.size()));
        }
        report.summaries.clear();
        report.one_sample.clear();
      }
      out << RenderReport(report, format);
      return kExitOk;
    }
    if (baselines->parsed()) {
      BaselineOptions options;
      options.measure = ToMeasureConfig(f);
      options.mode = options.measure.mode;
      options.measures = ToMeasures(f.measures);
      const auto kind = ParseBaselineKind(f.baseline);
      if (!kind) throw ConfigError("unknown baseline '" + f.baseline + "'");
      options.baseline = {f.step, *kind};
      const bool stance = options.mode == EvaluationMode::kStance;
      options.protected_label = f.protected_label.empty()
                                    ? (stance ? "pro" : "conservative")
                                    : f.protected_label;
      options.unprotected_label = f.unprotected_label.empty()
                                      ? (stance ? "against" : "liberal")
                                      : f.unprotected_label;
      options.Validate();
      const OutputFormat format = ToFormat(f.output);
      const Dataset dataset = LoadDataset(f.input, in);
      out << RenderBaselineReport(EvaluateBaselines(dataset, options), format);
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "serpbias: configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const Error& e) {
    err << "serpbias: input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitConfigError;
}

}  // namespace serpbias
