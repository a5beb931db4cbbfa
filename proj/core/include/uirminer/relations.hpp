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

#ifndef UIRMINER_RELATIONS_HPP
#define UIRMINER_RELATIONS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "uirminer/model.hpp"
#include "uirminer/relation_code.hpp"

namespace uirminer {

// Allen relation of e2 with respect to e1. Requires e1 to precede e2 in
// canonical order (e1.st < e2.st, or equal st and e1.ft <= e2.ft); throws
// std::logic_error otherwise.
TemporalRelation classify(Time st1, Time ft1, Time st2, Time ft2);

inline TemporalRelation classify(const IntervalEvent &e1,
                                 const IntervalEvent &e2) {
  return classify(e1.st, e1.ft, e2.st, e2.ft);
}

// Relation digits of every event from the second onward against all earlier
// events: result[j - 1][i] = R(event_i, event_j). Digit i of event j is taken
// as before without comparing endpoints whenever digit i of event j-1 is
// before, since E_i.ft < E_{j-1}.st <= E_j.st.
std::vector<std::vector<TemporalRelation>>
sequenceRelationDigits(const ESequence &seq);

// Same digits packed as base-7 codes, one per event from the second onward.
std::vector<RelationCode> sequenceRelations(const ESequence &seq);

// Dense all-pairs classification. Entries below the diagonal are unused.
class RelationMatrix {
public:
  RelationMatrix() = default;
  explicit RelationMatrix(std::size_t n)
      : n_(n), cells_(n * n, TemporalRelation::Before) {}

  std::size_t size() const { return n_; }
  TemporalRelation at(std::size_t i, std::size_t j) const {
    return cells_[i * n_ + j];
  }
  void set(std::size_t i, std::size_t j, TemporalRelation r) {
    cells_[i * n_ + j] = r;
  }

private:
  std::size_t n_ = 0;
  std::vector<TemporalRelation> cells_;
};

RelationMatrix relationMatrix(const ESequence &seq);

} // namespace uirminer

#endif // UIRMINER_RELATIONS_HPP
