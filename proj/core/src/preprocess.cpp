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

#include "uirminer/preprocess.hpp"

#include <set>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace uirminer {

ESequenceArray buildArray(const ESequence &seq) {
  ESequenceArray a;
  const std::size_t n = seq.size();
  a.labels.reserve(n);
  a.st.reserve(n);
  a.ft.reserve(n);
  a.utility.reserve(n);
  for (const IntervalEvent &e : seq.events()) {
    a.labels.push_back(e.label);
    a.st.push_back(e.st);
    a.ft.push_back(e.ft);
    a.utility.push_back(e.utility);
  }
  a.ru.assign(n, 0);
  for (std::size_t i = n; i-- > 1;)
    a.ru[i - 1] = a.ru[i] + a.utility[i];
  a.sstp.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i)
    a.sstp[i] = a.st[i] == a.st[i - 1] ? a.sstp[i - 1] : i;
  return a;
}

std::map<std::string, Utility> computeSEU(const IntervalDatabase &db) {
  std::map<std::string, Utility> seu;
  std::set<std::string_view> seen;
  for (const ESequence &s : db.sequences()) {
    seen.clear();
    for (const IntervalEvent &e : s.events())
      if (seen.insert(e.label).second)
        seu[e.label] += s.totalUtility();
  }
  return seu;
}

PruneResult pruneUnpromisingDetailed(const IntervalDatabase &db,
                                     Utility minutil) {
  PruneResult result;
  std::vector<std::vector<IntervalEvent>> current;
  current.reserve(db.size());
  for (const ESequence &s : db.sequences())
    current.push_back(s.events());

  std::unordered_set<std::string> removed;
  for (;;) {
    std::unordered_map<std::string_view, Utility> seu;
    std::unordered_set<std::string_view> seen;
    for (const auto &events : current) {
      Utility total = 0;
      for (const IntervalEvent &e : events)
        total += e.utility;
      seen.clear();
      for (const IntervalEvent &e : events)
        if (seen.insert(e.label).second)
          seu[e.label] += total;
    }
    std::unordered_set<std::string> unpromising;
    for (const auto &[label, value] : seu)
      if (value < minutil)
        unpromising.emplace(label);
    if (unpromising.empty())
      break;
    ++result.rounds;
    removed.insert(unpromising.begin(), unpromising.end());
    for (auto &events : current)
      std::erase_if(events, [&](const IntervalEvent &e) {
        return unpromising.count(e.label) != 0;
      });
    std::erase_if(current, [](const auto &events) { return events.empty(); });
  }

  std::vector<ESequence> sequences;
  sequences.reserve(current.size());
  for (std::size_t i = 0; i < current.size(); ++i)
    sequences.emplace_back(i + 1, std::move(current[i]));
  result.database = IntervalDatabase(std::move(sequences));
  result.labelsRemoved = removed.size();
  return result;
}

} // namespace uirminer
