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

#ifndef UIRMINER_PREPROCESS_HPP
#define UIRMINER_PREPROCESS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "uirminer/model.hpp"

namespace uirminer {

// Column view of one E-sequence. Indices are 0-based.
struct ESequenceArray {
  std::vector<std::string> labels;
  std::vector<Time> st;
  std::vector<Time> ft;
  std::vector<Utility> utility;
  // ru[i] = sum of utility[j] for j > i.
  std::vector<Utility> ru;
  // sstp[i] = smallest j with st[j] == st[i].
  std::vector<std::size_t> sstp;

  std::size_t size() const { return utility.size(); }

  // Sum of utility over positions [from, to).
  Utility rangeUtility(std::size_t from, std::size_t to) const {
    if (from >= to)
      return 0;
    Utility tail = to < size() ? ru[to] + utility[to] : 0;
    return ru[from] + utility[from] - tail;
  }
};

ESequenceArray buildArray(const ESequence &seq);

// SEU(label) = sum of total utilities of the sequences containing label.
std::map<std::string, Utility> computeSEU(const IntervalDatabase &db);

struct PruneResult {
  IntervalDatabase database;
  // Distinct labels removed across all rounds.
  std::size_t labelsRemoved = 0;
  std::size_t rounds = 0;
};

// Repeatedly drops every event whose label has SEU < minutil until no label
// is removed. Empty sequences are dropped and the rest renumbered 1..n.
PruneResult pruneUnpromisingDetailed(const IntervalDatabase &db,
                                     Utility minutil);

inline IntervalDatabase pruneUnpromising(const IntervalDatabase &db,
                                         Utility minutil) {
  return pruneUnpromisingDetailed(db, minutil).database;
}

} // namespace uirminer

#endif // UIRMINER_PREPROCESS_HPP
