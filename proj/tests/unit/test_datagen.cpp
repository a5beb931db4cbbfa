// Copyright 2026 The UIRMiner Authors.
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

#include <set>

#include <gtest/gtest.h>

#include "uirminer/datagen.hpp"
#include "uirminer/io.hpp"

namespace uirminer {
namespace {

TEST(RandomStreamTest, SplitMixReferenceValue) {
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(RandomStreamTest, FrozenReferenceSequence) {
  RandomStream r(42, 1);
  EXPECT_EQ(r.next(), 322574185352333729ULL);
  EXPECT_EQ(r.next(), 16476475769444334003ULL);
  EXPECT_EQ(r.next(), 4337415086205634694ULL);
}

TEST(RandomStreamTest, SubstreamsDiffer) {
  RandomStream a(42, 1), b(42, 2), c(43, 1);
  const auto x = a.next();
  EXPECT_NE(x, b.next());
  EXPECT_NE(x, c.next());
}

TEST(RandomStreamTest, DistributionsStayInRange) {
  RandomStream r(1, 1);
  double sum = 0;
  for (int i = 0; i < 20000; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(r.below(7), 7u);
    sum += static_cast<double>(r.poisson(32));
  }
  EXPECT_NEAR(sum / 20000, 32.0, 0.3);
}

TEST(GenerateTest, FrozenSmallDatabase) {
  GenParams p;
  p.numSequences = 3;
  p.meanSeqLen = 4;
  p.alphabetSize = 5;
  p.seed = 7;
  EXPECT_EQ(writeDatabase(generate(p)),
            "E000,550,626,263 E001,592,639,155\n"
            "E000,4,47,181 E002,143,166,68 E004,674,737,252\n"
            "E001,68,115,389 E004,285,340,215 E000,436,501,112 "
            "E004,626,685,284 E001,748,776,70\n");
}

TEST(GenerateTest, DeterministicForSeed) {
  GenParams p;
  p.numSequences = 200;
  EXPECT_EQ(writeDatabase(generate(p)), writeDatabase(generate(p)));
  GenParams q = p;
  q.seed = 43;
  EXPECT_NE(writeDatabase(generate(p)), writeDatabase(generate(q)));
}

TEST(GenerateTest, SingleSymbolAlphabet) {
  GenParams p;
  p.numSequences = 50;
  p.alphabetSize = 1;
  std::set<std::string> labels;
  for (const ESequence &s : generate(p).sequences())
    for (const IntervalEvent &e : s.events())
      labels.insert(e.label);
  EXPECT_EQ(labels, (std::set<std::string>{"E000"}));
}

TEST(GenerateTest, EventsSatisfyModelInvariants) {
  GenParams p;
  p.numSequences = 300;
  p.sdDuration = 80; // forces truncation at 1
  const auto db = generate(p);
  for (const ESequence &s : db.sequences()) {
    ASSERT_GE(s.size(), 1u);
    for (const IntervalEvent &e : s.events()) {
      ASSERT_LT(e.st, e.ft);
      ASSERT_GE(e.st, 0);
      ASSERT_LT(e.st, p.timeHorizon);
      ASSERT_GE(e.utility, 1);
    }
  }
}

TEST(GenerateTest, MeanLengthMatchesTarget) {
  GenParams p;
  p.numSequences = 10000;
  p.alphabetSize = 200;
  p.meanSeqLen = 32;
  p.seed = 42;
  const auto db = generate(p);
  const double mean =
      static_cast<double>(db.eventCount()) / static_cast<double>(db.size());
  EXPECT_NEAR(mean, 31.5, 3.15);
  EXPECT_NEAR(mean, 32.0, 0.3);
}

TEST(GenerateTest, LabelWidthGrowsWithAlphabet) {
  EXPECT_EQ(symbolLabel(7, 200), "E007");
  EXPECT_EQ(symbolLabel(7, 5000), "E0007");
}

TEST(GenerateTest, RejectsInvalidParams) {
  GenParams p;
  p.numSequences = 0;
  EXPECT_THROW(generate(p), std::invalid_argument);
  p = {};
  p.sdUtility = -1;
  EXPECT_THROW(generate(p), std::invalid_argument);
  p = {};
  p.timeHorizon = 0;
  EXPECT_THROW(generate(p), std::invalid_argument);
}

} // namespace
} // namespace uirminer
