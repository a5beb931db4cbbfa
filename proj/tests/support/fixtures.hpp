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

#ifndef UIRMINER_TESTS_FIXTURES_HPP
#define UIRMINER_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uirminer/model.hpp"

namespace uirminer::testing {

// S1 = A C B D with A b C, C o B, B o D; S2 shares the order, S3 swaps B and
// C. Total utility 62.
inline IntervalDatabase runningExample() {
  return loadValidate({
      {{"A", 0, 2, 8}, {"C", 3, 6, 10}, {"B", 5, 9, 7}, {"D", 8, 12, 9}},
      {{"A", 0, 1, 2}, {"C", 2, 3, 2}, {"B", 4, 7, 4}, {"D", 6, 9, 6}},
      {{"A", 0, 1, 2}, {"B", 2, 3, 4}, {"C", 4, 5, 2}, {"D", 6, 8, 6}},
  });
}

struct RandomDbShape {
  std::size_t maxSequences = 8;
  std::size_t maxEvents = 10;
  std::size_t alphabet = 5;
  Utility maxUtility = 9;
  // Small horizon so that meets/starts/equals/finished-by actually occur.
  Time horizon = 12;
  Time maxDuration = 6;
};

inline IntervalDatabase randomDatabase(std::uint64_t seed,
                                       const RandomDbShape &shape = {}) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
  };
  std::vector<std::vector<IntervalEvent>> raw(pick(1, shape.maxSequences));
  for (auto &events : raw) {
    const std::size_t n = pick(1, shape.maxEvents);
    for (std::size_t i = 0; i < n; ++i) {
      IntervalEvent e;
      e.label = std::string(1, static_cast<char>('A' + pick(0, shape.alphabet - 1)));
      e.st = static_cast<Time>(pick(0, static_cast<std::uint64_t>(shape.horizon)));
      e.ft = e.st + static_cast<Time>(
                        pick(1, static_cast<std::uint64_t>(shape.maxDuration)));
      e.utility = static_cast<Utility>(
          pick(1, static_cast<std::uint64_t>(shape.maxUtility)));
      events.push_back(std::move(e));
    }
  }
  return loadValidate(std::move(raw));
}

} // namespace uirminer::testing

#endif // UIRMINER_TESTS_FIXTURES_HPP
