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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <unistd.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "serpbias/bias.h"
#include "serpbias/cli.h"
#include "serpbias/dataset.h"
#include "serpbias/evaluation.h"
#include "serpbias/fairness.h"
#include "serpbias/stats.h"
#include "synthetic.h"
#include "test_util.h"

namespace serpbias {
namespace {

using testing::BruteForceZ;
using Clock = std::chrono::steady_clock;

constexpr double kExactTol = 1e-12;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool Close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// Each check returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), format, a, b, c);
  return buffer;
}

std::string RunEvaluate(const std::string& path, int* code) {
  std::istringstream in;
  std::ostringstream out, err;
  *code = RunCli({"evaluate", "--input", path}, in, out, err);
  return *code == kExitOk ? out.str() : err.str();
}

struct TempDataset {
  static inline int counter = 0;
  std::string path;
  explicit TempDataset(const Dataset& dataset)
      : path((std::filesystem::temp_directory_path() /
              ("serpbias_acceptance_" + std::to_string(::getpid()) + "_" +
               std::to_string(counter++) + ".jsonl"))
                 .string()) {
    std::ofstream(path) << SerializeDataset(dataset);
  }
  ~TempDataset() { std::filesystem::remove(path); }
};

Dataset SmallDataset() {
  std::mt19937_64 rng(7);
  return testing::SyntheticDataset(
      rng, 8, {"alpha", "beta"},
      {testing::ShiftedSampler(1), testing::ShiftedSampler(-1)});
}

std::string Criterion1() {
  const auto start = Clock::now();
  MeasureConfig p{.cutoff = 5, .measure_kind = MeasureKind::kPrecision};
  MeasureConfig rbp{.persistence = 0.8, .measure_kind = MeasureKind::kRbp};
  MeasureConfig dcg{.cutoff = 5, .log_base = 2.0, .measure_kind = MeasureKind::kDcg};
  double worst = 0.0;
  for (int code = 0; code < 1024; ++code) {
    std::vector<StanceLabel> r(5);
    for (int k = 0, c = code; k < 5; ++k, c /= 4) r[k] = kAllStances[c % 4];
    worst = std::max({worst,
                      std::fabs(Bias(r, p) - testing::OracleBiasPrecision(r, 5)),
                      std::fabs(Bias(r, rbp) - testing::OracleBiasRbp(r, 0.8)),
                      std::fabs(Bias(r, dcg) - testing::OracleBiasDcg(r, 5, 2.0))});
  }
  const double elapsed = Seconds(start);
  if (worst > kExactTol) return Fmt("max deviation %.3g", worst);
  if (elapsed >= 1.0) return Fmt("took %.3f s", elapsed);
  return "";
}

std::string Criterion2() {
  std::mt19937_64 rng(2);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const RankedList r = testing::RandomList(rng, 20);
    const RankedList mirrored = Mirror(r);
    for (EvaluationMode mode : {EvaluationMode::kStance, EvaluationMode::kIdeology}) {
      for (MeasureKind kind : kAllMeasures) {
        MeasureConfig cfg{.measure_kind = kind, .mode = mode};
        worst = std::max(worst, std::fabs(Bias(mirrored, cfg) + Bias(r, cfg)));
      }
    }
  }
  return worst <= kExactTol ? "" : Fmt("max |b(r) + b(mirror r)| = %.3g", worst);
}

std::string Criterion3() {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num_queries(1, 30);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RankedList> lists;
    const int q = num_queries(rng);
    for (int i = 0; i < q; ++i) {
      lists.push_back(RankedList::FromStances(
          testing::RandomStances(rng, 10), LeaningLabel::kLiberal, "e",
          testing::QueryId(i)));
    }
    const EngineRun run("e", lists);
    for (MeasureKind kind : kAllMeasures) {
      MeasureConfig cfg{.measure_kind = kind};
      const std::vector<double> betas = QueryBiases(run, cfg);
      const double mb = MeanBias(run, cfg);
      const double mab = MeanAbsBias(run, cfg);
      if (mab < std::fabs(mb) - kExactTol) {
        return Fmt("MAB %.17g < |MB| %.17g", mab, std::fabs(mb));
      }
      const bool same_sign =
          std::all_of(betas.begin(), betas.end(), [](double b) { return b >= 0; }) ||
          std::all_of(betas.begin(), betas.end(), [](double b) { return b <= 0; });
      if (same_sign && !Close(mab, std::fabs(mb), kExactTol)) {
        return Fmt("same-sign run has MAB %.17g != |MB| %.17g", mab, std::fabs(mb));
      }
    }
    // A list paired with its mirror image cancels exactly.
    const RankedList first = lists.front();
    const EngineRun pair("e", {first, RankedList("e", "mirror", first.leaning(),
                                                 Mirror(first).docs())});
    for (MeasureKind kind : kAllMeasures) {
      const double mb = MeanBias(pair, MeasureConfig{.measure_kind = kind});
      if (!Close(mb, 0.0, kExactTol)) return Fmt("MB of {+x, -x} = %.3g", mb);
    }
  }
  return "";
}

std::string Criterion4() {
  TempDataset file(SmallDataset());
  int code = 0;
  const std::string out = RunEvaluate(file.path, &code);
  if (code != kExitOk) return "evaluate failed: " + out;
  const auto config = nlohmann::json::parse(out).at("config");
  if (config.at("cutoff").get<int>() != 10) return "cutoff is not 10";
  if (config.at("persistence").get<double>() != 0.8) return "persistence is not 0.8";
  return "";
}

std::string Criterion5() {
  int lists = 0;
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    if (std::popcount(mask) != 5) continue;
    std::vector<Group> groups(10);
    for (int k = 0; k < 10; ++k) {
      groups[k] = (mask >> k) & 1u ? Group::kProtected : Group::kUnprotected;
    }
    const double d = DistanceRnd(groups, 1);
    if (d != 0.5) return Fmt("d(1) = %.17g for mask %.0f", d, mask);
    ++lists;
  }
  return lists == 252 ? "" : "wrong number of arrangements";
}

std::string Criterion6() {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> half(2, 10);
  std::uniform_int_distribution<int> step(1, 2);
  const BaselineConfig base{.kind = BaselineKind::kRkl};
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int h = half(rng);
    std::vector<StanceLabel> stances(2 * h, StanceLabel::kAgainst);
    std::fill(stances.begin(), stances.begin() + h, StanceLabel::kPro);
    std::shuffle(stances.begin(), stances.end(), rng);
    const RankedList r = RankedList::FromStances(stances);
    const GroupAssignment<StanceLabel> groups{StanceLabel::kPro, StanceLabel::kAgainst};
    BaselineConfig cfg = base;
    cfg.step = step(rng);
    const double a = BaselineScore<StanceLabel>(r.Stances(), groups, cfg);
    const double b = BaselineScore<StanceLabel>(Mirror(r).Stances(), groups, cfg);
    worst = std::max(worst, std::fabs(a - b));
  }
  return worst <= kExactTol ? "" : Fmt("max |rKL(r) - rKL(mirror r)| = %.3g", worst);
}

std::string Criterion7() {
  const auto start = Clock::now();
  double worst = 0.0;
  int cases = 0;
  for (BaselineKind kind : {BaselineKind::kRnd, BaselineKind::kRkl}) {
    for (int step = 1; step <= 3; ++step) {
      for (int len = 1; len <= 8; ++len) {
        for (int k = 0; k <= len; ++k) {
          const double expected = BruteForceZ(kind, len, k, step);
          const double actual = NormalizerZ(kind, len, k, step);
          worst = std::max(worst, std::fabs(expected - actual) /
                                      std::max(1.0, std::fabs(expected)));
          ++cases;
        }
      }
    }
  }
  const double elapsed = Seconds(start);
  if (worst > kExactTol) return Fmt("max relative deviation %.3g", worst);
  if (elapsed >= 10.0) return Fmt("took %.3f s", elapsed);
  return "";
}

std::string Criterion8() {
  const double p2 = StudentTTwoSidedSf(4.303, 2);
  const double p4 = StudentTTwoSidedSf(2.776, 4);
  if (!Close(p2, 0.05, 5e-4)) return Fmt("p(4.303, 2) = %.6f", p2);
  if (!Close(p4, 0.05, 5e-4)) return Fmt("p(2.776, 4) = %.6f", p4);
  std::mt19937_64 rng(8);
  std::normal_distribution<double> noise(0.0, 1.0);
  int rejected = 0;
  constexpr int kRuns = 10000;
  std::vector<double> sample(20);
  for (int run = 0; run < kRuns; ++run) {
    for (double& x : sample) x = noise(rng);
    if (OneSampleTTest(sample, 0.0, 0.05).p_value < 0.05) ++rejected;
  }
  const double rate = static_cast<double>(rejected) / kRuns;
  return Close(rate, 0.05, 0.01) ? "" : Fmt("null rejection rate %.4f", rate);
}

double PrecisionMeanAndP(const Dataset& dataset, double* p_value) {
  EvaluateOptions options;
  options.measures = {MeasureKind::kPrecision};
  const ComparisonReport report =
      Evaluate(ParseDataset(SerializeDataset(dataset)), options);
  *p_value = report.one_sample.at(0).test.result.p_value;
  return report.summaries.at(0).mb;
}

std::string Criterion9() {
  const auto start = Clock::now();
  std::mt19937_64 rng(9);
  TempDataset planted(
      testing::SyntheticDataset(rng, 57, {"planted"}, {testing::ShiftedSampler(2)}));
  std::istringstream in;
  std::ostringstream out, err;
  if (RunCli({"evaluate", "--input", planted.path, "--measures", "p"}, in, out,
             err) != kExitOk) {
    return "evaluate failed: " + err.str();
  }
  const auto report = nlohmann::json::parse(out.str());
  const double mb = report.at("engines").at(0).at("mb").get<double>();
  const double p = report.at("one_sample").at(0).at("p_value").get<double>();
  if (!Close(mb, 0.2, 0.05)) return Fmt("planted MB = %.4f", mb);
  if (!(p < 0.01)) return Fmt("planted p = %.4g", p);
  int rejected = 0;
  constexpr int kRuns = 1000;
  for (int run = 0; run < kRuns; ++run) {
    double null_p = 1.0;
    PrecisionMeanAndP(
        testing::SyntheticDataset(rng, 57, {"null"}, {testing::ShiftedSampler(0)}),
        &null_p);
    if (null_p < 0.05) ++rejected;
  }
  const double rate = static_cast<double>(rejected) / kRuns;
  if (!Close(rate, 0.05, 0.02)) return Fmt("null rejection rate %.3f", rate);
  const double elapsed = Seconds(start);
  if (elapsed >= 30.0) return Fmt("took %.3f s", elapsed);
  return "";
}

std::string Criterion10() {
  TempDataset file(SmallDataset());
  int first_code = 0, second_code = 0;
  const std::string first = RunEvaluate(file.path, &first_code);
  const std::string second = RunEvaluate(file.path, &second_code);
  if (first_code != kExitOk || second_code != kExitOk) return "evaluate failed";
  return first == second ? "" : "outputs differ";
}

}  // namespace
}  // namespace serpbias

int main() {
  using serpbias::Check;
  const std::vector<std::pair<const char*, Check>> criteria = {
      {"1 bias matches oracle on all 4^5 lists", serpbias::Criterion1},
      {"2 mirror antisymmetry", serpbias::Criterion2},
      {"3 MAB >= |MB|", serpbias::Criterion3},
      {"4 CLI defaults n=10 p=0.8", serpbias::Criterion4},
      {"5 rND distance at i=1 on balanced lists", serpbias::Criterion5},
      {"6 rKL mirror symmetry on balanced lists", serpbias::Criterion6},
      {"7 normalizer matches brute force", serpbias::Criterion7},
      {"8 t-test p-values and null calibration", serpbias::Criterion8},
      {"9 planted bias recovered end to end", serpbias::Criterion9},
      {"10 deterministic output", serpbias::Criterion10},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    std::string problem;
    try {
      problem = check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (problem.empty()) {
      std::printf("PASS criterion %s\n", name);
    } else {
      std::printf("FAIL criterion %s: %s\n", name, problem.c_str());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
