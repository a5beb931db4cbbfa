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

#ifndef UIRMINER_ORACLE_HPP
#define UIRMINER_ORACLE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "uirminer/mining.hpp"
#include "uirminer/model.hpp"

namespace uirminer {

// Exhaustive reference miner for tiny databases. Shares nothing with the
// pruned search except the data model.

class OracleGuardError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kOracleMaxEvents = 200;
inline constexpr std::size_t kOracleMaxSize = 6;

// Every rule of 2..maxSize intervals with at least one occurrence, sorted
// canonically. Throws OracleGuardError beyond the size limits.
std::vector<MinedRule> enumerateRules(const IntervalDatabase &db,
                                      std::size_t maxSize);

std::vector<MinedRule> oracleMine(const IntervalDatabase &db, Utility minutil,
                                  Rational minconf, std::size_t maxSize);

} // namespace uirminer

#endif // UIRMINER_ORACLE_HPP
