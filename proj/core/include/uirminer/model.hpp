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

#ifndef UIRMINER_MODEL_HPP
#define UIRMINER_MODEL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uirminer/relation_code.hpp"

namespace uirminer {

using Time = std::int64_t;
using Utility = std::int64_t;
using SequenceId = std::size_t;

// A labeled, timed, utility-weighted interval.
struct IntervalEvent {
  std::string label;
  Time st = 0;
  Time ft = 0;
  Utility utility = 1;

  friend bool operator==(const IntervalEvent &, const IntervalEvent &) = default;
};

class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// True iff the label is a non-empty string over [A-Za-z0-9_].
bool isValidLabel(std::string_view label);

// Canonical order of events: (st, ft, label). Ties keep input order, so
// callers sort with std::stable_sort.
bool canonicalLess(const IntervalEvent &a, const IntervalEvent &b);

// An E-sequence: events in canonical order. Immutable after construction.
class ESequence {
public:
  ESequence() = default;
  ESequence(SequenceId sid, std::vector<IntervalEvent> events);

  SequenceId sid() const { return sid_; }
  const std::vector<IntervalEvent> &events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  const IntervalEvent &operator[](std::size_t i) const { return events_[i]; }
  Utility totalUtility() const { return totalUtility_; }

  friend bool operator==(const ESequence &, const ESequence &) = default;

private:
  SequenceId sid_ = 0;
  std::vector<IntervalEvent> events_;
  Utility totalUtility_ = 0;
};

class IntervalDatabase {
public:
  IntervalDatabase() = default;
  // Takes sequences whose events are already canonical and sids 1..n.
  explicit IntervalDatabase(std::vector<ESequence> sequences);

  const std::vector<ESequence> &sequences() const { return sequences_; }
  std::size_t size() const { return sequences_.size(); }
  bool empty() const { return sequences_.empty(); }
  const ESequence &operator[](std::size_t i) const { return sequences_[i]; }
  Utility totalUtility() const { return totalUtility_; }
  std::size_t eventCount() const;

  friend bool operator==(const IntervalDatabase &,
                         const IntervalDatabase &) = default;

private:
  std::vector<ESequence> sequences_;
  Utility totalUtility_ = 0;
};

// Validates raw events, sorts each sequence canonically and numbers the
// sequences 1..n in input order. Throws ValidationError.
IntervalDatabase loadValidate(std::vector<std::vector<IntervalEvent>> raw);

// Antecedent -> consequent over labels, plus one relation code per rule
// interval from the second onward (code j relates interval j+1 to 1..j).
struct IntervalRule {
  std::vector<std::string> antecedent;
  std::vector<std::string> consequent;
  std::vector<RelationCode> relations;

  std::size_t size() const { return antecedent.size() + consequent.size(); }
  const std::string &label(std::size_t i) const {
    return i < antecedent.size() ? antecedent[i]
                                 : consequent[i - antecedent.size()];
  }
  // Relation between rule intervals i < j.
  TemporalRelation relation(std::size_t i, std::size_t j) const {
    return relations[j - 1].digit(i);
  }

  // Throws ValidationError when the shape is inconsistent or an
  // antecedent/consequent pair carries starts or equals.
  void validate() const;

  friend bool operator==(const IntervalRule &, const IntervalRule &) = default;
  friend std::strong_ordering operator<=>(const IntervalRule &,
                                          const IntervalRule &) = default;
};

IntervalRule makeRule(std::vector<std::string> antecedent,
                      std::vector<std::string> consequent,
                      std::vector<RelationCode> relations);

struct RuleOccurrence {
  SequenceId sid = 0;
  std::vector<std::size_t> positions;
  Utility utility = 0;
};

struct BestOccurrence {
  RuleOccurrence best;
  // First matched position of the lexicographically smallest occurrence.
  std::size_t earliestFirstPosition = 0;
};

// Visits every occurrence of the rule in the sequence in lexicographic order
// of position vectors.
void forEachOccurrence(const IntervalRule &rule, const ESequence &seq,
                       const std::function<void(const RuleOccurrence &)> &fn);

std::optional<BestOccurrence> findBestOccurrence(const IntervalRule &rule,
                                                 const ESequence &seq);

bool antecedentOccurs(const IntervalRule &rule, const ESequence &seq);

// Exact non-negative rational.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  // Parses "0.6", "1", "2/3". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  // Rounded half-to-even at the given number of decimals.
  std::string toDecimal(int decimals = 4) const;

  friend bool operator==(const Rational &a, const Rational &b) {
    return static_cast<unsigned __int128>(a.num) * b.den ==
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b) {
    return static_cast<unsigned __int128>(a.num) * b.den <=>
           static_cast<unsigned __int128>(b.num) * a.den;
  }
};

} // namespace uirminer

#endif // UIRMINER_MODEL_HPP
