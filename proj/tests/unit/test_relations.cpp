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

#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "uirminer/relations.hpp"

namespace uirminer {
namespace {

using R = TemporalRelation;

TEST(ClassifyTest, AllSevenRelations) {
  EXPECT_EQ(classify(0, 2, 3, 5), R::Before);
  EXPECT_EQ(classify(0, 3, 3, 5), R::Meets);
  EXPECT_EQ(classify(0, 4, 3, 5), R::Overlaps);
  EXPECT_EQ(classify(0, 4, 0, 5), R::Starts);
  EXPECT_EQ(classify(0, 9, 3, 5), R::Contains);
  EXPECT_EQ(classify(0, 5, 3, 5), R::FinishedBy);
  EXPECT_EQ(classify(3, 5, 3, 5), R::Equals);
}

TEST(ClassifyTest, RejectsNonCanonicalPairs) {
  EXPECT_THROW(classify(3, 5, 0, 2), std::logic_error);
  // Same start, longer first interval comes second canonically.
  EXPECT_THROW(classify(0, 5, 0, 4), std::logic_error);
}

TEST(LettersTest, RoundTrip) {
  const std::string letters = "bmoscfe";
  for (int d = 0; d < kRelationCount; ++d) {
    const R r = *relationFromDigit(d);
    EXPECT_EQ(relationLetter(r), letters[d]);
    EXPECT_EQ(relationFromLetter(letters[d]), r);
  }
  EXPECT_FALSE(relationFromLetter('x'));
  EXPECT_FALSE(relationFromDigit(7));
}

TEST(RelationCodeTest, BaseSevenText) {
  const R digits[] = {R::Before, R::Overlaps, R::Meets};
  const RelationCode code = RelationCode::fromDigits(digits);
  EXPECT_EQ(code.value(), 0u * 49 + 2 * 7 + 1);
  EXPECT_EQ(code.toBase7(), "21");
  EXPECT_EQ(RelationCode::parseBase7("21", 3), code);
  EXPECT_EQ(RelationCode::parseBase7("021", 3), code);
  EXPECT_EQ(RelationCode(0, 4).toBase7(), "0");
  EXPECT_THROW(RelationCode(49, 2), std::invalid_argument);
  EXPECT_THROW(RelationCode::parseBase7("8", 1), std::invalid_argument);
  EXPECT_THROW(RelationCode::parseBase7("123", 2), std::invalid_argument);
}

TEST(RelationCodeTest, WideCodesKeepDigits) {
  std::vector<R> digits(40, R::Before);
  digits[0] = R::Equals;
  digits[39] = R::Contains;
  const RelationCode code = encodeDigits(digits);
  EXPECT_FALSE(code.compact());
  EXPECT_EQ(decodeCode(code), digits);
  EXPECT_EQ(code.toBase7(), "6" + std::string(38, '0') + "4");
  EXPECT_EQ(RelationCode::parseBase7(code.toBase7(), 40), code);
  EXPECT_THROW(code.value(), std::logic_error);
}

TEST(RelationCodeTest, OrderingIsByArityThenValue) {
  EXPECT_LT(RelationCode(6, 1), RelationCode(0, 2));
  EXPECT_LT(RelationCode(3, 2), RelationCode(4, 2));
}

TEST(SequenceRelationsTest, RunningExampleFirstSequence) {
  const auto db = testing::runningExample();
  const auto codes = sequenceRelations(db[0]);
  ASSERT_EQ(codes.size(), 3u);
  EXPECT_EQ(codes[0].value(), 0u);
  EXPECT_EQ(codes[1].value(), 2u);
  EXPECT_EQ(codes[2].value(), 2u);
}

TEST(SequenceRelationsTest, ArrayExampleSequence) {
  const auto db = loadValidate(
      {{{"A", 2, 8, 8}, {"B", 9, 15, 10}, {"C", 14, 20, 7}, {"D", 14, 22, 9}}});
  const auto codes = sequenceRelations(db[0]);
  ASSERT_EQ(codes.size(), 3u);
  EXPECT_EQ(codes[0].toBase7(), "0");
  EXPECT_EQ(codes[1].toBase7(), "2");
  EXPECT_EQ(codes[2].toBase7(), "23"); // B o D, C s D
  EXPECT_EQ(codes[2].value(), 17u);
}

TEST(SequenceRelationsTest, EmptyAndSingleton) {
  EXPECT_TRUE(sequenceRelations(ESequence{}).empty());
  const auto db = loadValidate({{{"A", 0, 1, 1}}});
  EXPECT_TRUE(sequenceRelations(db[0]).empty());
  EXPECT_EQ(relationMatrix(db[0]).size(), 1u);
}

TEST(SequenceRelationsTest, MatchesDenseMatrixOnRandomSequences) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<IntervalEvent> events;
    const int n = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      const Time st = static_cast<Time>(rng() % 30);
      events.push_back({"E", st, st + 1 + static_cast<Time>(rng() % 8), 1});
    }
    const auto db = loadValidate({events});
    const auto codes = sequenceRelations(db[0]);
    const RelationMatrix m = relationMatrix(db[0]);
    for (std::size_t j = 1; j < db[0].size(); ++j)
      for (std::size_t i = 0; i < j; ++i) {
        ASSERT_EQ(codes[j - 1].digit(i), m.at(i, j));
        ASSERT_EQ(m.at(i, j), classify(db[0][i], db[0][j]));
      }
  }
}

} // namespace
} // namespace uirminer
