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

#include "uirminer/relations.hpp"

namespace uirminer {

TemporalRelation classify(Time st1, Time ft1, Time st2, Time ft2) {
  if (st1 > st2 || (st1 == st2 && ft1 > ft2))
    throw std::logic_error("classify: intervals are not in canonical order");
  if (ft1 < st2)
    return TemporalRelation::Before;
  if (ft1 == st2)
    return TemporalRelation::Meets;
  if (st1 == st2)
    return ft1 == ft2 ? TemporalRelation::Equals : TemporalRelation::Starts;
  // st1 < st2 < ft1 from here on.
  if (ft1 < ft2)
    return TemporalRelation::Overlaps;
  if (ft1 == ft2)
    return TemporalRelation::FinishedBy;
  return TemporalRelation::Contains;
}

std::vector<std::vector<TemporalRelation>>
sequenceRelationDigits(const ESequence &seq) {
  std::vector<std::vector<TemporalRelation>> out;
  if (seq.size() < 2)
    return out;
  out.reserve(seq.size() - 1);
  for (std::size_t j = 1; j < seq.size(); ++j) {
    const IntervalEvent &ej = seq[j];
    std::vector<TemporalRelation> digits(j, TemporalRelation::Before);
    if (j >= 2) {
      const std::vector<TemporalRelation> &prev = out.back();
      for (std::size_t i = 0; i + 1 < j; ++i)
        if (prev[i] != TemporalRelation::Before)
          digits[i] = classify(seq[i], ej);
    }
    digits[j - 1] = classify(seq[j - 1], ej);
    out.push_back(std::move(digits));
  }
  return out;
}

std::vector<RelationCode> sequenceRelations(const ESequence &seq) {
  std::vector<RelationCode> codes;
  for (const auto &digits : sequenceRelationDigits(seq))
    codes.push_back(RelationCode::fromDigits(digits));
  return codes;
}

RelationMatrix relationMatrix(const ESequence &seq) {
  RelationMatrix m(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      m.set(i, j, classify(seq[i], seq[j]));
  return m;
}

} // namespace uirminer
