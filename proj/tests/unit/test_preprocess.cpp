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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "uirminer/mining.hpp"
#include "uirminer/oracle.hpp"
#include "uirminer/preprocess.hpp"

namespace uirminer {
namespace {

TEST(BuildArrayTest, RemainingUtilityAndSameStartPointer) {
  const auto db = loadValidate(
      {{{"A", 2, 8, 8}, {"B", 9, 15, 10}, {"C", 14, 20, 7}, {"D", 14, 22, 9}}});
  const ESequenceArray a = buildArray(db[0]);
  EXPECT_EQ(a.ru, (std::vector<Utility>{26, 16, 9, 0}));
  EXPECT_EQ(a.sstp, (std::vector<std::size_t>{0, 1, 2, 2}));
  EXPECT_EQ(a.rangeUtility(1, 3), 17);
  EXPECT_EQ(a.rangeUtility(0, 4), 34);
  EXPECT_EQ(a.rangeUtility(3, 3), 0);
}

TEST(SeuTest, RunningExample) {
  const auto seu = computeSEU(testing::runningExample());
  for (const char *label : {"A", "B", "C", "D"})
    EXPECT_EQ(seu.at(label), 62);
}

TEST(SeuTest, CountsEachSequenceOnce) {
  const auto db = loadValidate({{{"A", 0, 1, 3}, {"A", 2, 3, 4}},
                                {{"B", 0, 1, 5}}});
  const auto seu = computeSEU(db);
  EXPECT_EQ(seu.at("A"), 7);
  EXPECT_EQ(seu.at("B"), 5);
}

TEST(PruneTest, IteratesToFixpoint) {
  // Dropping B shrinks the second sequence, which then drops E.
  const auto db = loadValidate({{{"A", 0, 1, 10}},
                                {{"B", 0, 1, 3}, {"E", 2, 3, 2}},
                                {{"E", 0, 1, 1}}});
  const PruneResult r = pruneUnpromisingDetailed(db, 6);
  ASSERT_EQ(r.database.size(), 1u);
  EXPECT_EQ(r.database[0].size(), 1u);
  EXPECT_EQ(r.database[0][0].label, "A");
  EXPECT_EQ(r.database[0].sid(), 1u);
  EXPECT_EQ(r.labelsRemoved, 2u);
  EXPECT_EQ(r.rounds, 2u);
}

TEST(PruneTest, NothingRemovedAtZero) {
  const auto db = testing::runningExample();
  EXPECT_EQ(pruneUnpromising(db, 0), db);
  EXPECT_EQ(pruneUnpromising(db, 62), db);
  EXPECT_TRUE(pruneUnpromising(db, 63).empty());
}

TEST(PruneTest, LosslessAgainstOracle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto db = testing::randomDatabase(seed);
    for (Utility minutil : {5, 20, 40}) {
      const auto pruned = pruneUnpromising(db, minutil);
      EXPECT_EQ(oracleMine(pruned, minutil, {}, 4),
                oracleMine(db, minutil, {}, 4))
          << "seed " << seed << " minutil " << minutil;
    }
  }
}

} // namespace
} // namespace uirminer
