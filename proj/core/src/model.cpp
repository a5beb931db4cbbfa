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

#include "uirminer/model.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "uirminer/relations.hpp"

namespace uirminer {

bool isValidLabel(std::string_view label) {
  if (label.empty())
    return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

bool canonicalLess(const IntervalEvent &a, const IntervalEvent &b) {
  if (a.st != b.st)
    return a.st < b.st;
  if (a.ft != b.ft)
    return a.ft < b.ft;
  return a.label < b.label;
}

namespace {

Utility checkedSum(Utility a, Utility b) {
  Utility out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw ValidationError("utility total overflows 64-bit range");
  return out;
}

} // namespace

ESequence::ESequence(SequenceId sid, std::vector<IntervalEvent> events)
    : sid_(sid), events_(std::move(events)) {
  for (const IntervalEvent &e : events_)
    totalUtility_ = checkedSum(totalUtility_, e.utility);
}

IntervalDatabase::IntervalDatabase(std::vector<ESequence> sequences)
    : sequences_(std::move(sequences)) {
  for (const ESequence &s : sequences_)
    totalUtility_ = checkedSum(totalUtility_, s.totalUtility());
}

std::size_t IntervalDatabase::eventCount() const {
  std::size_t n = 0;
  for (const ESequence &s : sequences_)
    n += s.size();
  return n;
}

IntervalDatabase loadValidate(std::vector<std::vector<IntervalEvent>> raw) {
  std::vector<ESequence> sequences;
  sequences.reserve(raw.size());
  for (std::size_t s = 0; s < raw.size(); ++s) {
    auto &events = raw[s];
    const std::string where = "sequence " + std::to_string(s + 1);
    if (events.empty())
      throw ValidationError(where + ": empty sequence");
    for (std::size_t i = 0; i < events.size(); ++i) {
      const IntervalEvent &e = events[i];
      const std::string item = where + ", event " + std::to_string(i + 1);
      if (!isValidLabel(e.label))
        throw ValidationError(item + ": invalid label '" + e.label + "'");
      if (e.st < 0)
        throw ValidationError(item + ": negative start time");
      if (e.st >= e.ft)
        throw ValidationError(item + ": zero-length or inverted interval (st " +
                              std::to_string(e.st) + " >= ft " +
                              std::to_string(e.ft) + ")");
      if (e.utility < 1)
        throw ValidationError(item + ": utility must be >= 1");
    }
    std::stable_sort(events.begin(), events.end(), canonicalLess);
    sequences.emplace_back(s + 1, std::move(events));
  }
  return IntervalDatabase(std::move(sequences));
}

void IntervalRule::validate() const {
  if (antecedent.empty() || consequent.empty())
    throw ValidationError("rule needs a non-empty antecedent and consequent");
  if (relations.size() != size() - 1)
    throw ValidationError("rule needs one relation code per interval after "
                          "the first");
  for (std::size_t j = 0; j < relations.size(); ++j)
    if (relations[j].arity() != j + 1)
      throw ValidationError("relation code " + std::to_string(j + 1) +
                            " has arity " +
                            std::to_string(relations[j].arity()) +
                            ", expected " + std::to_string(j + 1));
  for (std::size_t i = 0; i < antecedent.size(); ++i)
    for (std::size_t j = antecedent.size(); j < size(); ++j) {
      TemporalRelation r = relation(i, j);
      if (r == TemporalRelation::Starts || r == TemporalRelation::Equals)
        throw ValidationError("antecedent interval must start strictly "
                              "before every consequent interval");
    }
}

IntervalRule makeRule(std::vector<std::string> antecedent,
                      std::vector<std::string> consequent,
                      std::vector<RelationCode> relations) {
  IntervalRule rule{std::move(antecedent), std::move(consequent),
                    std::move(relations)};
  rule.validate();
  return rule;
}

namespace {

// Backtracking matcher over the first `width` rule intervals.
class OccurrenceMatcher {
public:
  OccurrenceMatcher(const IntervalRule &rule, std::size_t width,
                    bool strictSplit, const ESequence &seq)
      : rule_(rule), width_(width), strictSplit_(strictSplit), seq_(seq),
        positions_(width) {}

  // fn returns false to stop the search.
  template <typename Fn> void run(Fn &&fn) {
    stop_ = false;
    descend(0, 0, fn);
  }

private:
  template <typename Fn> void descend(std::size_t depth, std::size_t from,
                                     Fn &fn) {
    if (depth == width_) {
      if (!fn(positions_))
        stop_ = true;
      return;
    }
    const std::string &want = rule_.label(depth);
    for (std::size_t p = from; p < seq_.size() && !stop_; ++p) {
      const IntervalEvent &e = seq_[p];
      if (e.label != want)
        continue;
      if (strictSplit_ && depth == rule_.antecedent.size() &&
          seq_[positions_[depth - 1]].st >= e.st)
        continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i)
        ok = classify(seq_[positions_[i]], e) == rule_.relation(i, depth);
      if (!ok)
        continue;
      positions_[depth] = p;
      descend(depth + 1, p + 1, fn);
    }
  }

  const IntervalRule &rule_;
  std::size_t width_;
  bool strictSplit_;
  const ESequence &seq_;
  std::vector<std::size_t> positions_;
  bool stop_ = false;
};

} // namespace

void forEachOccurrence(const IntervalRule &rule, const ESequence &seq,
                       const std::function<void(const RuleOccurrence &)> &fn) {
  OccurrenceMatcher matcher(rule, rule.size(), true, seq);
  RuleOccurrence occ;
  occ.sid = seq.sid();
  matcher.run([&](const std::vector<std::size_t> &pos) {
    occ.positions = pos;
    occ.utility = 0;
    for (std::size_t p : pos)
      occ.utility += seq[p].utility;
    fn(occ);
    return true;
  });
}

std::optional<BestOccurrence> findBestOccurrence(const IntervalRule &rule,
                                                 const ESequence &seq) {
  std::optional<BestOccurrence> out;
  // Occurrences arrive in lexicographic order, so strict improvement keeps
  // the smallest position vector among equal utilities.
  forEachOccurrence(rule, seq, [&](const RuleOccurrence &occ) {
    if (!out) {
      out = BestOccurrence{occ, occ.positions.front()};
    } else if (occ.utility > out->best.utility) {
      out->best = occ;
    }
  });
  return out;
}

bool antecedentOccurs(const IntervalRule &rule, const ESequence &seq) {
  OccurrenceMatcher matcher(rule, rule.antecedent.size(), false, seq);
  bool found = false;
  matcher.run([&](const std::vector<std::size_t> &) {
    found = true;
    return false;
  });
  return found;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a non-negative rational: '" +
                                std::string(text) + "'");
  };
  auto parseUint = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      fail();
    return v;
  };
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = parseUint(text.substr(0, slash));
    r.den = parseUint(text.substr(slash + 1));
    if (r.den == 0)
      fail();
  } else {
    auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac =
        dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty())
      fail();
    if (frac.size() > 18)
      fail();
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i)
      scale *= 10;
    std::uint64_t w = whole.empty() ? 0 : parseUint(whole);
    std::uint64_t f = frac.empty() ? 0 : parseUint(frac);
    unsigned __int128 n = static_cast<unsigned __int128>(w) * scale + f;
    if (n > UINT64_MAX)
      fail();
    r.num = static_cast<std::uint64_t>(n);
    r.den = scale;
  }
  std::uint64_t g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string Rational::toDecimal(int decimals) const {
  unsigned __int128 scale = 1;
  for (int i = 0; i < decimals; ++i)
    scale *= 10;
  unsigned __int128 scaled = static_cast<unsigned __int128>(num) * scale;
  unsigned __int128 q = scaled / den;
  unsigned __int128 rem = scaled % den;
  unsigned __int128 twice = rem * 2;
  if (twice > den || (twice == den && (q & 1) != 0))
    ++q;
  unsigned __int128 whole = q / scale;
  unsigned __int128 frac = q % scale;
  auto toString = [](unsigned __int128 v, int width) {
    std::string s;
    do {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    } while (v > 0);
    while (static_cast<int>(s.size()) < width)
      s.insert(s.begin(), '0');
    return s;
  };
  std::string out = toString(whole, 1);
  if (decimals > 0)
    out += "." + toString(frac, decimals);
  return out;
}

} // namespace uirminer
