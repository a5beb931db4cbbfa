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

#ifndef UIRMINER_MINING_HPP
#define UIRMINER_MINING_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "uirminer/model.hpp"
#include "uirminer/preprocess.hpp"

namespace uirminer {

// Minimum utility, either absolute or a percentage of the database's total
// utility. Percentages resolve to ceil(pct * total / 100).
class UtilityThreshold {
public:
  static UtilityThreshold absolute(Utility value);
  // Throws std::invalid_argument unless 0 <= pct <= 100.
  static UtilityThreshold percent(Rational pct);

  Utility resolve(Utility totalUtility) const;
  bool isPercent() const { return isPercent_; }

private:
  bool isPercent_ = false;
  Utility absolute_ = 0;
  Rational percent_;
};

class MiningObserver;

struct MiningConfig {
  UtilityThreshold minutil = UtilityThreshold::absolute(0);
  Rational minconf{0, 1};
  // Off = the variant without utility complement pruning.
  bool enableComplementPruning = true;
  // Off = per-sequence relations come from the dense all-pairs matrix instead
  // of the skip-before digit codes.
  bool enableEncodedRelations = true;
  // Largest rule (antecedent + consequent intervals) to explore; >= 2.
  std::optional<std::size_t> maxRuleSize;
  unsigned threads = 1;
  // Optional instrumentation; calls are serialized across worker threads.
  MiningObserver *observer = nullptr;
};

struct MiningStats {
  std::uint64_t candidatesGenerated = 0;
  std::uint64_t rulesOutput = 0;
  // Distinct labels removed by unpromising-interval pruning.
  std::uint64_t prunedBySEU = 0;
  // Extension labels or left recursions cut by the left-extension bound.
  std::uint64_t prunedByLERSPEU = 0;
  // Extension labels or right recursions cut by the right-extension bound.
  std::uint64_t prunedByRERSPEU = 0;
  // Relation-digit classes skipped by utility complement pruning.
  std::uint64_t prunedByComplement = 0;
  // Right recursions cut because conf < minconf.
  std::uint64_t prunedByConfidence = 0;
  std::chrono::nanoseconds wallTime{0};

  MiningStats &operator+=(const MiningStats &o);
};

struct MinedRule {
  IntervalRule rule;
  Utility utility = 0;
  // |seq(r)| and |ant(r)|.
  std::size_t support = 0;
  std::size_t antecedentSupport = 0;

  Rational confidence() const { return {support, antecedentSupport}; }

  friend bool operator==(const MinedRule &, const MinedRule &) = default;
};

// Utility descending, then antecedent labels, consequent labels, codes.
bool ruleOrderLess(const MinedRule &a, const MinedRule &b);
void sortRules(std::vector<MinedRule> &rules);

struct MiningResult {
  std::vector<MinedRule> rules;
  MiningStats stats;
  // The absolute threshold actually applied.
  Utility minutil = 0;
};

// All rules with u(r) >= minutil and conf(r) >= minconf, canonically sorted.
MiningResult mine(const IntervalDatabase &db, const MiningConfig &cfg);

// Per-sequence utility-list records.
struct AULEntry {
  SequenceId esid = 0;
  bool iro = false;
  Utility ub = 0;

  friend bool operator==(const AULEntry &, const AULEntry &) = default;
};

struct CULEntry {
  SequenceId esid = 0;
  Utility ub = 0;

  friend bool operator==(const CULEntry &, const CULEntry &) = default;
};

enum class Side { Left, Right };

// Left: positions after the last antecedent match whose start precedes the
// first consequent's start. Right: positions after the last match.
std::vector<std::size_t> extendableIntervals(const RuleOccurrence &occ,
                                             std::size_t antecedentSize,
                                             const ESequenceArray &array,
                                             Side side);

// u(r,S) plus the extendable utility on the given side, maximized over the
// rule's occurrences in S. With an extension label, only extendables from the
// first position carrying that label onward count, and occurrences without
// such a position contribute nothing. Zero when the rule does not occur.
Utility computeLERSPEU(const IntervalRule &rule, const ESequence &seq,
                       const std::optional<std::string> &extension = {});
Utility computeRERSPEU(const IntervalRule &rule, const ESequence &seq,
                       const std::optional<std::string> &extension = {});

// One entry per sequence where the antecedent occurs; ub = u(r,S) plus left
// and right extendable utility (max over occurrences), 0 when r is absent.
std::vector<AULEntry> buildAUL(const IntervalRule &rule,
                               const IntervalDatabase &db);
// One entry per sequence where the rule occurs; ub = RERSPEU(r,S).
std::vector<CULEntry> buildCUL(const IntervalRule &rule,
                               const IntervalDatabase &db);

Utility ruleUtility(const IntervalRule &rule, const IntervalDatabase &db);
// Absent when the antecedent occurs nowhere.
std::optional<Rational> ruleConfidence(const IntervalRule &rule,
                                       const IntervalDatabase &db);
Rational ruleSupport(const IntervalRule &rule, const IntervalDatabase &db);

struct SeedRule {
  MinedRule mined;
  std::vector<AULEntry> aul;
  std::vector<CULEntry> cul;
};

// Every 1x1 rule realized in the database (which callers normally prune by
// SEU first), ordered by antecedent label, consequent label, digit.
std::vector<SeedRule> seedRules(const IntervalDatabase &db,
                                const MiningConfig &cfg);

enum class Origin { Seed, Left, Right };

struct CandidateEvent {
  IntervalRule rule;
  Origin origin = Origin::Seed;
  Utility utility = 0;
  std::size_t support = 0;
  std::size_t antecedentSupport = 0;
  Utility aulBound = 0;
  Utility culBound = 0;
  // Bound that admitted this candidate; absent for seeds.
  std::optional<Utility> licensingBound;
  std::optional<IntervalRule> parent;
  std::size_t parentSupport = 0;
  std::size_t parentAntecedentSupport = 0;
};

struct DigitClassEvent {
  IntervalRule parent;
  Side side = Side::Left;
  std::string label;
  int digit = 0;
  Utility naiveBound = 0;
  Utility initialBound = 0;
  Utility rub = 0;
  Utility remainingAfter = 0;
  bool expanded = false;
  // Iteration over further digits stopped after this one.
  bool stopped = false;
};

class MiningObserver {
public:
  virtual ~MiningObserver() = default;
  virtual void onCandidate(const CandidateEvent &) {}
  virtual void onDigitClass(const DigitClassEvent &) {}
};

} // namespace uirminer

#endif // UIRMINER_MINING_HPP
