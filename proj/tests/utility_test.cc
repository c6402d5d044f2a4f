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

#include "serpbias/utility.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "serpbias/errors.h"
#include "serpbias/model.h"
#include "test_util.h"

namespace serpbias {
namespace {

using S = StanceLabel;
constexpr S kPro = S::kPro;
constexpr S kAg = S::kAgainst;
constexpr S kNeu = S::kNeutral;
constexpr S kNr = S::kNotRelevant;

TEST(PrecisionAt, AllMatching) {
  const std::vector<S> r(10, kPro);
  EXPECT_DOUBLE_EQ(PrecisionAt<S>(r, kPro, 10), 1.0);
}

TEST(PrecisionAt, EmptyList) {
  EXPECT_EQ(PrecisionAt<S>({}, kPro, 10), 0.0);
}

TEST(PrecisionAt, MixedList) {
  const std::vector<S> r = {kPro, kAg, kPro, kNeu, kPro,
                            kNr,  kAg, kNeu, kNeu, kNeu};
  EXPECT_NEAR(PrecisionAt<S>(r, kPro, 10), 0.3, 1e-15);
}

TEST(PrecisionAt, ShortListCountsMissingAsZero) {
  EXPECT_DOUBLE_EQ(PrecisionAt<S>(std::vector<S>{kPro, kPro}, kPro, 10), 0.2);
}

TEST(PrecisionAt, RejectsZeroCutoff) {
  EXPECT_THROW(PrecisionAt<S>(std::vector<S>{kPro}, kPro, 0), ConfigError);
}

TEST(Rbp, SingleTopHit) {
  EXPECT_NEAR(RankBiasedPrecision<S>(std::vector<S>{kPro}, kPro, 0.8), 0.2,
              1e-15);
}

TEST(Rbp, EmptyList) {
  EXPECT_EQ(RankBiasedPrecision<S>({}, kPro, 0.8), 0.0);
}

TEST(Rbp, ClosedFormForAllMatching) {
  const std::vector<S> r(10, kPro);
  // 1 - 0.8^10
  EXPECT_NEAR(RankBiasedPrecision<S>(r, kPro, 0.8), 0.8926258176, 1e-12);
}

TEST(Rbp, RejectsPersistenceOutsideOpenInterval) {
  const std::vector<S> r = {kPro};
  EXPECT_THROW(RankBiasedPrecision<S>(r, kPro, 0.0), ConfigError);
  EXPECT_THROW(RankBiasedPrecision<S>(r, kPro, 1.0), ConfigError);
  EXPECT_THROW(RankBiasedPrecision<S>(r, kPro, NAN), ConfigError);
}

TEST(Dcg, SingleTopHit) {
  EXPECT_DOUBLE_EQ(DcgAt<S>(std::vector<S>{kPro}, kPro, 10, 2.0), 1.0);
}

TEST(Dcg, EmptyList) { EXPECT_EQ(DcgAt<S>({}, kPro, 10, 2.0), 0.0); }

TEST(Dcg, TwoTopHits) {
  // 1 + 1/log2(3)
  EXPECT_NEAR(DcgAt<S>(std::vector<S>{kPro, kPro}, kPro, 10, 2.0),
              1.6309297535714575, 1e-12);
}

TEST(Dcg, RejectsBaseAtMostOne) {
  EXPECT_THROW(DcgAt<S>(std::vector<S>{kPro}, kPro, 10, 1.0), ConfigError);
  EXPECT_THROW(DcgAt<S>(std::vector<S>{kPro}, kPro, 10, 0.5), ConfigError);
}

TEST(Dcg, CutoffTruncates) {
  EXPECT_DOUBLE_EQ(DcgAt<S>(std::vector<S>{kNeu, kPro}, kPro, 1, 2.0), 0.0);
}

TEST(MeasureConfig, Defaults) {
  MeasureConfig cfg;
  EXPECT_EQ(cfg.cutoff, 10);
  EXPECT_EQ(cfg.persistence, 0.8);
  EXPECT_EQ(cfg.log_base, 2.0);
  EXPECT_NO_THROW(cfg.Validate());
  cfg.cutoff = 0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
}

TEST(MeasureKind, Names) {
  for (MeasureKind kind : kAllMeasures) {
    EXPECT_EQ(ParseMeasureKind(ToString(kind)), kind);
  }
  EXPECT_EQ(ParseMeasureKind("precision"), MeasureKind::kPrecision);
  EXPECT_FALSE(ParseMeasureKind("ndcg").has_value());
}

MeasureConfig Config(MeasureKind kind) {
  MeasureConfig cfg;
  cfg.measure_kind = kind;
  return cfg;
}

TEST(UtilityProperties, AddingAMatchNeverDecreases) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<S> r = testing::RandomStances(rng, rng() % 21);
    if (r.empty()) continue;
    std::vector<S> more = r;
    more[rng() % r.size()] = kPro;
    for (MeasureKind kind : kAllMeasures) {
      EXPECT_GE(Utility<S>(more, kPro, Config(kind)),
                Utility<S>(r, kPro, Config(kind)));
    }
  }
}

TEST(UtilityProperties, PrecisionIgnoresOrderWithinCutoff) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<S> r = testing::RandomStances(rng, 10 + rng() % 6);
    std::vector<S> shuffled = r;
    std::shuffle(shuffled.begin(), shuffled.begin() + 10, rng);
    EXPECT_EQ(PrecisionAt<S>(shuffled, kPro, 10), PrecisionAt<S>(r, kPro, 10));
  }
}

TEST(UtilityProperties, PromotingAMatchStrictlyIncreases) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<S> r = testing::RandomStances(rng, 2 + rng() % 9);
    for (std::size_t k = 0; k + 1 < r.size(); ++k) {
      if (r[k] == kPro || r[k + 1] != kPro) continue;
      std::vector<S> swapped = r;
      std::swap(swapped[k], swapped[k + 1]);
      EXPECT_GT(RankBiasedPrecision<S>(swapped, kPro, 0.8),
                RankBiasedPrecision<S>(r, kPro, 0.8));
      EXPECT_GT(DcgAt<S>(swapped, kPro, 10, 2.0), DcgAt<S>(r, kPro, 10, 2.0));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(UtilityProperties, DisjointLabelsAreSubAdditive) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 500; ++trial) {
    const std::vector<S> r = testing::RandomStances(rng, rng() % 21);
    // Every document counted: replace all labels by the target.
    const std::vector<S> all(r.size(), kPro);
    bool only_sides = std::none_of(r.begin(), r.begin() + std::min<std::size_t>(r.size(), 10),
                                   [](S s) { return s == kNeu || s == kNr; });
    for (MeasureKind kind : kAllMeasures) {
      const MeasureConfig cfg = Config(kind);
      const double split =
          Utility<S>(r, kPro, cfg) + Utility<S>(r, kAg, cfg);
      const double total = Utility<S>(all, kPro, cfg);
      EXPECT_LE(split, total + 1e-12);
      if (only_sides && kind != MeasureKind::kRbp) {
        EXPECT_NEAR(split, total, 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace serpbias
