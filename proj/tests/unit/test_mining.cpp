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

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "uirminer/mining.hpp"
#include "uirminer/oracle.hpp"

namespace uirminer {
namespace {

IntervalRule rule(std::vector<std::string> ant, std::vector<std::string> con,
                  std::vector<std::uint64_t> codes) {
  std::vector<RelationCode> rel;
  for (std::size_t j = 0; j < codes.size(); ++j)
    rel.emplace_back(codes[j], j + 1);
  return makeRule(std::move(ant), std::move(con), std::move(rel));
}

MiningConfig config(Utility minutil, const char *minconf) {
  MiningConfig cfg;
  cfg.minutil = UtilityThreshold::absolute(minutil);
  cfg.minconf = Rational::parse(minconf);
  return cfg;
}

struct Recorder : MiningObserver {
  std::vector<CandidateEvent> candidates;
  std::vector<DigitClassEvent> classes;
  void onCandidate(const CandidateEvent &e) override { candidates.push_back(e); }
  void onDigitClass(const DigitClassEvent &e) override { classes.push_back(e); }
};

TEST(MineTest, RunningExampleRules) {
  const auto result = mine(testing::runningExample(), config(35, "0.6"));
  const std::vector<MinedRule> expected = {
      {rule({"A"}, {"C", "D"}, {0, 0}), 47, 3, 3},
      {rule({"A", "C"}, {"D"}, {0, 0}), 47, 3, 3},
      {rule({"A"}, {"B", "D"}, {0, 2}), 36, 2, 3},
      {rule({"A", "B"}, {"D"}, {0, 2}), 36, 2, 3},
      {rule({"C"}, {"D"}, {0}), 35, 3, 3},
  };
  EXPECT_EQ(result.rules, expected);
  EXPECT_EQ(result.minutil, 35);
  EXPECT_EQ(result.stats.rulesOutput, 5u);
  EXPECT_GE(result.stats.candidatesGenerated, 5u);
}

TEST(MineTest, HigherConfidenceDropsTwoRules) {
  const auto result = mine(testing::runningExample(), config(35, "0.7"));
  ASSERT_EQ(result.rules.size(), 3u);
  for (const MinedRule &r : result.rules)
    EXPECT_EQ(r.confidence(), (Rational{1, 1}));
}

TEST(MineTest, EmptyDatabase) {
  const auto result = mine(IntervalDatabase{}, config(0, "0"));
  EXPECT_TRUE(result.rules.empty());
  EXPECT_EQ(result.stats.candidatesGenerated, 0u);
}

TEST(MineTest, RejectsBadConfig) {
  const auto db = testing::runningExample();
  auto cfg = config(1, "0");
  cfg.maxRuleSize = 1;
  EXPECT_THROW(mine(db, cfg), std::invalid_argument);
  cfg = config(1, "0");
  cfg.minconf = Rational{3, 2};
  EXPECT_THROW(mine(db, cfg), std::invalid_argument);
}

TEST(ThresholdTest, PercentResolvesByCeiling) {
  EXPECT_EQ(UtilityThreshold::percent({50, 1}).resolve(62), 31);
  EXPECT_EQ(UtilityThreshold::percent({10, 1}).resolve(62), 7);
  EXPECT_EQ(UtilityThreshold::percent({0, 1}).resolve(62), 0);
  EXPECT_EQ(UtilityThreshold::percent({100, 1}).resolve(62), 62);
  EXPECT_EQ(UtilityThreshold::absolute(9).resolve(62), 9);
  EXPECT_THROW(UtilityThreshold::percent({200, 1}), std::invalid_argument);
  EXPECT_THROW(UtilityThreshold::absolute(-1), std::invalid_argument);
}

TEST(UtilityListTest, AntecedentList) {
  const auto aul =
      buildAUL(rule({"A"}, {"B", "D"}, {0, 2}), testing::runningExample());
  const std::vector<AULEntry> expected = {
      {1, true, 34}, {2, true, 14}, {3, false, 0}};
  EXPECT_EQ(aul, expected);
}

TEST(UtilityListTest, ConsequentList) {
  const auto cul =
      buildCUL(rule({"A"}, {"C"}, {0}), testing::runningExample());
  const std::vector<CULEntry> expected = {{1, 34}, {2, 14}, {3, 10}};
  EXPECT_EQ(cul, expected);
}

TEST(ExtensionBoundTest, LabelSpecificBounds) {
  const auto db = testing::runningExample();
  EXPECT_EQ(computeLERSPEU(rule({"A"}, {"D"}, {0}), db[2], "C"), 10);
  EXPECT_EQ(computeLERSPEU(rule({"A"}, {"D"}, {0}), db[2], "B"), 14);
  EXPECT_EQ(computeLERSPEU(rule({"A"}, {"D"}, {0}), db[2]), 14);
  EXPECT_EQ(computeRERSPEU(rule({"A"}, {"C"}, {0}), db[0], "D"), 27);
  EXPECT_EQ(computeRERSPEU(rule({"A"}, {"C"}, {0}), db[0], "B"), 34);
  EXPECT_EQ(computeRERSPEU(rule({"A"}, {"C"}, {0}), db[0], "A"), 0);
}

TEST(ExtensionBoundTest, ExtendableIntervals) {
  const auto db = testing::runningExample();
  const ESequenceArray a = buildArray(db[0]);
  RuleOccurrence occ{1, {0, 3}, 17};
  EXPECT_EQ(extendableIntervals(occ, 1, a, Side::Left),
            (std::vector<std::size_t>{1, 2}));
  occ.positions = {0, 1};
  EXPECT_EQ(extendableIntervals(occ, 1, a, Side::Right),
            (std::vector<std::size_t>{2, 3}));
}

TEST(SeedRulesTest, ListsAgreeWithReference) {
  for (std::uint64_t seed : {0ull, 3ull, 11ull, 29ull}) {
    const auto db = seed == 0 ? testing::runningExample()
                              : testing::randomDatabase(seed);
    for (const SeedRule &s : seedRules(db, config(0, "0"))) {
      EXPECT_EQ(s.aul, buildAUL(s.mined.rule, db));
      EXPECT_EQ(s.cul, buildCUL(s.mined.rule, db));
      EXPECT_EQ(s.mined.utility, ruleUtility(s.mined.rule, db));
    }
  }
}

TEST(SeedRulesTest, RunningExampleSeeds) {
  const auto seeds = seedRules(testing::runningExample(), config(0, "0"));
  auto it = std::find_if(seeds.begin(), seeds.end(), [](const SeedRule &s) {
    return s.mined.rule == rule({"C"}, {"D"}, {0});
  });
  ASSERT_NE(it, seeds.end());
  EXPECT_EQ(it->mined.utility, 35);
  EXPECT_EQ(it->mined.support, 3u);
}

TEST(ComplementTest, DigitClassesForRightExtension) {
  Recorder rec;
  auto cfg = config(35, "0.6");
  cfg.observer = &rec;
  mine(testing::runningExample(), cfg);
  const IntervalRule parent = rule({"A"}, {"B"}, {0});
  std::vector<DigitClassEvent> seen;
  for (const DigitClassEvent &e : rec.classes)
    if (e.parent == parent && e.side == Side::Right && e.label == "D")
      seen.push_back(e);
  ASSERT_EQ(seen.size(), 2u);
  EXPECT_EQ(seen[0].digit, 0);
  EXPECT_EQ(seen[0].rub, 12);
  EXPECT_EQ(seen[0].initialBound, 48);
  EXPECT_FALSE(seen[0].expanded);
  EXPECT_FALSE(seen[0].stopped);
  EXPECT_EQ(seen[1].digit, 2);
  EXPECT_EQ(seen[1].rub, 36);
  EXPECT_TRUE(seen[1].expanded);
  EXPECT_TRUE(seen[1].stopped);
  EXPECT_EQ(seen[1].remainingAfter, 0);
}

TEST(LeftExtensionTest, SplitsByFullRelationSignature) {
  Recorder rec;
  auto cfg = config(0, "0");
  cfg.observer = &rec;
  mine(testing::runningExample(), cfg);
  const IntervalRule parent = rule({"A"}, {"D"}, {0});
  std::vector<IntervalRule> children;
  for (const CandidateEvent &e : rec.candidates)
    if (e.origin == Origin::Left && e.parent == parent &&
        e.rule.antecedent == std::vector<std::string>{"A", "B"})
      children.push_back(e.rule);
  std::sort(children.begin(), children.end());
  // B before D in S3, B overlaps D in S1 and S2.
  const std::vector<IntervalRule> expected = {rule({"A", "B"}, {"D"}, {0, 0}),
                                              rule({"A", "B"}, {"D"}, {0, 2})};
  EXPECT_EQ(children, expected);
}

class RandomDatabaseTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomDatabaseTest, MatchesOracle) {
  const auto db = testing::randomDatabase(GetParam());
  for (Utility minutil : {1, 10, 25})
    for (const char *minconf : {"0", "0.5", "0.8"}) {
      auto cfg = config(minutil, minconf);
      cfg.maxRuleSize = 6;
      EXPECT_EQ(mine(db, cfg).rules,
                oracleMine(db, minutil, cfg.minconf, 6))
          << "minutil " << minutil << " minconf " << minconf;
    }
}

TEST_P(RandomDatabaseTest, UncappedMatchesOracleOnShortSequences) {
  testing::RandomDbShape shape;
  shape.maxEvents = 6;
  const auto db = testing::randomDatabase(GetParam() + 1000, shape);
  for (Utility minutil : {1, 15})
    EXPECT_EQ(mine(db, config(minutil, "0")).rules,
              oracleMine(db, minutil, {}, 6));
}

TEST_P(RandomDatabaseTest, VariantsAgree) {
  const auto db = testing::randomDatabase(GetParam());
  auto base = config(8, "0.3");
  const auto expected = mine(db, base).rules;
  for (int variant = 0; variant < 3; ++variant) {
    auto cfg = base;
    cfg.enableComplementPruning = variant != 0;
    cfg.enableEncodedRelations = variant != 1;
    cfg.threads = variant == 2 ? 3 : 1;
    EXPECT_EQ(mine(db, cfg).rules, expected) << "variant " << variant;
  }
}

TEST_P(RandomDatabaseTest, BoundsAreSoundAndListsExact) {
  const auto db = testing::randomDatabase(GetParam());
  Recorder rec;
  auto cfg = config(5, "0");
  cfg.observer = &rec;
  mine(db, cfg);
  // The prune at minutil 5 may remove labels; compare on the same database.
  const auto pruned = pruneUnpromising(db, 5);
  std::map<IntervalRule, const CandidateEvent *> byRule;
  for (const CandidateEvent &e : rec.candidates)
    byRule[e.rule] = &e;
  EXPECT_EQ(byRule.size(), rec.candidates.size()) << "duplicate candidate";
  for (const CandidateEvent &e : rec.candidates) {
    EXPECT_EQ(e.utility, ruleUtility(e.rule, pruned));
    const auto aul = buildAUL(e.rule, pruned);
    const auto cul = buildCUL(e.rule, pruned);
    EXPECT_EQ(e.antecedentSupport, aul.size());
    EXPECT_EQ(e.support, cul.size());
    EXPECT_EQ(e.aulBound,
              std::accumulate(aul.begin(), aul.end(), Utility{0},
                              [](Utility s, const AULEntry &a) { return s + a.ub; }));
    EXPECT_EQ(e.culBound,
              std::accumulate(cul.begin(), cul.end(), Utility{0},
                              [](Utility s, const CULEntry &c) { return s + c.ub; }));
    EXPECT_LE(e.utility, e.culBound);
    EXPECT_LE(e.culBound, e.aulBound);
    if (!e.parent)
      continue;
    const CandidateEvent &p = *byRule.at(*e.parent);
    ASSERT_TRUE(e.licensingBound);
    EXPECT_LE(e.utility, *e.licensingBound);
    if (e.origin == Origin::Left) {
      EXPECT_LE(e.aulBound, p.aulBound);
    } else {
      EXPECT_LE(e.culBound, p.culBound);
      // Right extensions keep the antecedent, so confidence cannot grow.
      EXPECT_EQ(e.antecedentSupport, p.antecedentSupport);
      EXPECT_LE(e.support, p.support);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomDatabaseTest,
                         ::testing::Range<std::uint64_t>(1, 61));

TEST(ThreadsTest, GeneratedDataIsDeterministic) {
  testing::RandomDbShape shape;
  shape.maxSequences = 60;
  shape.maxEvents = 12;
  shape.alphabet = 6;
  const auto db = testing::randomDatabase(99, shape);
  auto cfg = config(40, "0.2");
  const auto single = mine(db, cfg);
  cfg.threads = 4;
  const auto multi = mine(db, cfg);
  EXPECT_EQ(single.rules, multi.rules);
  EXPECT_EQ(single.stats.candidatesGenerated, multi.stats.candidatesGenerated);
  EXPECT_EQ(single.stats.prunedByComplement, multi.stats.prunedByComplement);
}

} // namespace
} // namespace uirminer
