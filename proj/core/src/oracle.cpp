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

#include "uirminer/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace uirminer {

namespace {

// Deliberately naive: a case analysis on the four endpoints, independent of
// the classifier used by the miner.
int naiveDigit(const IntervalEvent &a, const IntervalEvent &b) {
  if (a.ft < b.st)
    return 0; // before
  if (a.ft == b.st)
    return 1; // meets
  if (a.st == b.st && a.ft == b.ft)
    return 6; // equals
  if (a.st == b.st)
    return 3; // starts
  if (a.ft == b.ft)
    return 5; // finished by
  if (a.ft > b.ft)
    return 4; // contains
  return 2;   // overlaps
}

// Pattern key: labels followed by every pairwise digit.
struct Pattern {
  std::vector<std::string> labels;
  std::vector<int> digits;
  auto operator<=>(const Pattern &) const = default;
};

Pattern patternOf(const ESequence &seq, const std::vector<std::size_t> &idx) {
  Pattern p;
  for (std::size_t i : idx)
    p.labels.push_back(seq[i].label);
  for (std::size_t j = 1; j < idx.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      p.digits.push_back(naiveDigit(seq[idx[i]], seq[idx[j]]));
  return p;
}

struct Tally {
  std::map<SequenceId, Utility> best;
};

} // namespace

std::vector<MinedRule> enumerateRules(const IntervalDatabase &db,
                                      std::size_t maxSize) {
  if (db.eventCount() > kOracleMaxEvents)
    throw OracleGuardError("oracle refuses databases with more than " +
                           std::to_string(kOracleMaxEvents) + " events");
  if (maxSize > kOracleMaxSize)
    throw OracleGuardError("oracle refuses rule sizes above " +
                           std::to_string(kOracleMaxSize));

  // (pattern, split) -> per-sequence max occurrence utility; pattern -> sids.
  std::map<std::pair<Pattern, std::size_t>, Tally> rules;
  std::map<Pattern, std::set<SequenceId>> patternSeqs;

  for (const ESequence &seq : db.sequences()) {
    const std::size_t n = seq.size();
    std::vector<std::size_t> idx;
    // Depth-first over all increasing index subsequences.
    auto visit = [&](auto &self, std::size_t from) -> void {
      if (!idx.empty()) {
        Pattern p = patternOf(seq, idx);
        patternSeqs[p].insert(seq.sid());
        Utility u = 0;
        for (std::size_t i : idx)
          u += seq[i].utility;
        for (std::size_t k = 1; k < idx.size(); ++k) {
          if (seq[idx[k - 1]].st >= seq[idx[k]].st)
            continue;
          Utility &slot = rules[{p, k}].best[seq.sid()];
          slot = std::max(slot, u);
        }
      }
      if (idx.size() == maxSize)
        return;
      for (std::size_t i = from; i < n; ++i) {
        idx.push_back(i);
        self(self, i + 1);
        idx.pop_back();
      }
    };
    visit(visit, 0);
  }

  std::vector<MinedRule> out;
  for (const auto &[key, tally] : rules) {
    const auto &[pattern, k] = key;
    // Antecedent pattern = first k labels and their pairwise digits, which
    // are the first k*(k-1)/2 entries of the column-major digit list.
    Pattern ant;
    ant.labels.assign(pattern.labels.begin(), pattern.labels.begin() + k);
    ant.digits.assign(pattern.digits.begin(),
                      pattern.digits.begin() + k * (k - 1) / 2);
    MinedRule r;
    r.rule.antecedent = ant.labels;
    r.rule.consequent.assign(pattern.labels.begin() + k, pattern.labels.end());
    std::size_t at = 0;
    for (std::size_t j = 1; j < pattern.labels.size(); ++j) {
      std::vector<TemporalRelation> column;
      for (std::size_t i = 0; i < j; ++i)
        column.push_back(*relationFromDigit(pattern.digits[at++]));
      r.rule.relations.push_back(RelationCode::fromDigits(column));
    }
    for (const auto &[sid, u] : tally.best)
      r.utility += u;
    r.support = tally.best.size();
    r.antecedentSupport = patternSeqs.at(ant).size();
    out.push_back(std::move(r));
  }
  sortRules(out);
  return out;
}

std::vector<MinedRule> oracleMine(const IntervalDatabase &db, Utility minutil,
                                  Rational minconf, std::size_t maxSize) {
  std::vector<MinedRule> out;
  for (MinedRule &r : enumerateRules(db, maxSize))
    if (r.utility >= minutil && r.confidence() >= minconf)
      out.push_back(std::move(r));
  return out;
}

} // namespace uirminer
