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

#include "uirminer/mining.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <thread>

#include "uirminer/relations.hpp"

namespace uirminer {

UtilityThreshold UtilityThreshold::absolute(Utility value) {
  if (value < 0)
    throw std::invalid_argument("minutil must be >= 0");
  UtilityThreshold t;
  t.absolute_ = value;
  return t;
}

UtilityThreshold UtilityThreshold::percent(Rational pct) {
  if (pct > Rational{100, 1})
    throw std::invalid_argument("minutil percentage out of range [0, 100]");
  UtilityThreshold t;
  t.isPercent_ = true;
  t.percent_ = pct;
  return t;
}

Utility UtilityThreshold::resolve(Utility totalUtility) const {
  if (!isPercent_)
    return absolute_;
  // ceil(num * total / (den * 100))
  unsigned __int128 numer =
      static_cast<unsigned __int128>(percent_.num) *
      static_cast<unsigned __int128>(std::max<Utility>(totalUtility, 0));
  unsigned __int128 denom = static_cast<unsigned __int128>(percent_.den) * 100;
  return static_cast<Utility>((numer + denom - 1) / denom);
}

MiningStats &MiningStats::operator+=(const MiningStats &o) {
  candidatesGenerated += o.candidatesGenerated;
  rulesOutput += o.rulesOutput;
  prunedBySEU += o.prunedBySEU;
  prunedByLERSPEU += o.prunedByLERSPEU;
  prunedByRERSPEU += o.prunedByRERSPEU;
  prunedByComplement += o.prunedByComplement;
  prunedByConfidence += o.prunedByConfidence;
  return *this;
}

bool ruleOrderLess(const MinedRule &a, const MinedRule &b) {
  if (a.utility != b.utility)
    return a.utility > b.utility;
  if (a.rule.antecedent != b.rule.antecedent)
    return a.rule.antecedent < b.rule.antecedent;
  if (a.rule.consequent != b.rule.consequent)
    return a.rule.consequent < b.rule.consequent;
  return a.rule.relations < b.rule.relations;
}

void sortRules(std::vector<MinedRule> &rules) {
  std::sort(rules.begin(), rules.end(), ruleOrderLess);
}

namespace {

using LabelId = std::uint32_t;
using Pos = std::uint32_t;

struct PreparedSequence {
  SequenceId sid = 0;
  std::vector<LabelId> label;
  std::vector<Utility> utility;
  std::vector<Utility> ru;
  std::vector<Pos> sstp;
  // First position whose start is strictly later.
  std::vector<Pos> nextStart;
  // Triangular relation table: R(i, j) for i < j at j * (j - 1) / 2 + i.
  std::vector<std::uint8_t> rel;
  // (label, position) sorted.
  std::vector<std::pair<LabelId, Pos>> byLabel;

  Pos size() const { return static_cast<Pos>(label.size()); }

  std::uint8_t relation(Pos i, Pos j) const {
    return rel[static_cast<std::size_t>(j) * (j - 1) / 2 + i];
  }

  Utility range(Pos from, Pos to) const {
    if (from >= to)
      return 0;
    Utility tail = to < size() ? ru[to] + utility[to] : 0;
    return ru[from] + utility[from] - tail;
  }

  std::span<const std::pair<LabelId, Pos>> positionsOf(LabelId l) const {
    auto lo = std::lower_bound(byLabel.begin(), byLabel.end(),
                               std::pair<LabelId, Pos>{l, 0});
    auto hi = lo;
    while (hi != byLabel.end() && hi->first == l)
      ++hi;
    return {lo, hi};
  }
};

struct PreparedDatabase {
  std::vector<std::string> labelNames;
  std::vector<PreparedSequence> seqs;
  std::vector<std::vector<std::uint32_t>> sequencesWithLabel;
};

PreparedDatabase prepare(const IntervalDatabase &db, bool encoded) {
  PreparedDatabase out;
  std::map<std::string, LabelId> ids;
  for (const ESequence &s : db.sequences())
    for (const IntervalEvent &e : s.events())
      ids.emplace(e.label, 0);
  for (auto &[name, id] : ids) {
    id = static_cast<LabelId>(out.labelNames.size());
    out.labelNames.push_back(name);
  }
  out.sequencesWithLabel.resize(out.labelNames.size());

  out.seqs.reserve(db.size());
  for (const ESequence &s : db.sequences()) {
    const ESequenceArray array = buildArray(s);
    PreparedSequence ps;
    ps.sid = s.sid();
    const Pos n = static_cast<Pos>(array.size());
    ps.utility = array.utility;
    ps.ru = array.ru;
    ps.sstp.assign(array.sstp.begin(), array.sstp.end());
    ps.label.reserve(n);
    for (const std::string &l : array.labels)
      ps.label.push_back(ids.at(l));
    ps.nextStart.assign(n, n);
    for (Pos i = n; i-- > 0;)
      if (i + 1 < n)
        ps.nextStart[i] = array.st[i + 1] > array.st[i] ? i + 1
                                                        : ps.nextStart[i + 1];
    ps.rel.assign(static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2, 0);
    if (encoded) {
      const auto digits = sequenceRelationDigits(s);
      for (Pos j = 1; j < n; ++j)
        for (Pos i = 0; i < j; ++i)
          ps.rel[static_cast<std::size_t>(j) * (j - 1) / 2 + i] =
              static_cast<std::uint8_t>(digitOf(digits[j - 1][i]));
    } else {
      const RelationMatrix m = relationMatrix(s);
      for (Pos j = 1; j < n; ++j)
        for (Pos i = 0; i < j; ++i)
          ps.rel[static_cast<std::size_t>(j) * (j - 1) / 2 + i] =
              static_cast<std::uint8_t>(digitOf(m.at(i, j)));
    }
    ps.byLabel.reserve(n);
    for (Pos i = 0; i < n; ++i)
      ps.byLabel.emplace_back(ps.label[i], i);
    std::sort(ps.byLabel.begin(), ps.byLabel.end());
    const auto seqIndex = static_cast<std::uint32_t>(out.seqs.size());
    for (std::size_t i = 0; i < ps.byLabel.size(); ++i)
      if (i == 0 || ps.byLabel[i].first != ps.byLabel[i - 1].first)
        out.sequencesWithLabel[ps.byLabel[i].first].push_back(seqIndex);
    out.seqs.push_back(std::move(ps));
  }
  return out;
}

// Occurrences of one pattern, grouped by sequence in ascending order.
class OccurrenceList {
public:
  explicit OccurrenceList(std::uint32_t width = 0) : width_(width) {}

  std::uint32_t width() const { return width_; }
  std::size_t groups() const { return groupSeq_.size(); }
  std::size_t count() const { return util_.size(); }
  std::uint32_t groupSequence(std::size_t g) const { return groupSeq_[g]; }
  std::size_t groupBegin(std::size_t g) const {
    return g == 0 ? 0 : groupEnd_[g - 1];
  }
  std::size_t groupEnd(std::size_t g) const { return groupEnd_[g]; }
  const Pos *at(std::size_t o) const { return &pos_[o * width_]; }
  Utility utility(std::size_t o) const { return util_[o]; }

  void openOrContinue(std::uint32_t seq) {
    if (groupSeq_.empty() || groupSeq_.back() != seq) {
      groupSeq_.push_back(seq);
      groupEnd_.push_back(static_cast<std::uint32_t>(count()));
    }
  }
  void push(std::uint32_t seq, std::span<const Pos> positions, Utility u) {
    openOrContinue(seq);
    pos_.insert(pos_.end(), positions.begin(), positions.end());
    util_.push_back(u);
    groupEnd_.back() = static_cast<std::uint32_t>(count());
  }

private:
  std::uint32_t width_;
  std::vector<std::uint32_t> groupSeq_;
  std::vector<std::uint32_t> groupEnd_;
  std::vector<Pos> pos_;
  std::vector<Utility> util_;
};

struct Node {
  std::vector<LabelId> labels;
  std::uint32_t antSize = 0;
  // Triangular: relation(i, j) for i < j at j * (j - 1) / 2 + i.
  std::vector<std::uint8_t> digits;
  OccurrenceList occ;
  std::shared_ptr<const OccurrenceList> antOcc;
  std::size_t antSupport = 0;

  Utility utility = 0;
  std::size_t support = 0;
  Utility aulBound = 0;
  Utility culBound = 0;

  std::uint32_t size() const { return static_cast<std::uint32_t>(labels.size()); }
  std::uint8_t digit(std::uint32_t i, std::uint32_t j) const {
    return digits[static_cast<std::size_t>(j) * (j - 1) / 2 + i];
  }
};

struct Settings {
  Utility minutil = 0;
  Rational minconf;
  bool complement = true;
  std::size_t maxSize = std::numeric_limits<std::size_t>::max();
};

class SynchronizedObserver {
public:
  explicit SynchronizedObserver(MiningObserver *target) : target_(target) {}
  bool active() const { return target_ != nullptr; }
  void candidate(const CandidateEvent &e) {
    std::lock_guard lock(mu_);
    target_->onCandidate(e);
  }
  void digitClass(const DigitClassEvent &e) {
    std::lock_guard lock(mu_);
    target_->onDigitClass(e);
  }

private:
  MiningObserver *target_;
  std::mutex mu_;
};

struct Hit {
  LabelId label;
  std::uint8_t digit;
  Pos q;
  std::uint32_t group;
  std::uint32_t occ;
  Utility bound;
};

// Depth-first search over the rule subtrees rooted at the seeds of one
// antecedent label at a time.
class Worker {
public:
  Worker(const PreparedDatabase &db, const Settings &settings,
         SynchronizedObserver &observer)
      : db_(db), settings_(settings), observer_(observer),
        labelSum_(db.labelNames.size(), 0), labelCur_(db.labelNames.size(), 0),
        labelStamp_(db.labelNames.size(), 0),
        labelKeep_(db.labelNames.size(), 0) {}

  void processAntecedent(LabelId a) {
    buildSeeds(a, [this](Node &seed) {
      handle(seed, nullptr, Origin::Seed, std::nullopt);
    });
  }

  template <typename Fn> void buildSeeds(LabelId a, Fn &&fn);

  void evaluate(Node &node) const;
  IntervalRule toRule(const Node &node) const;

  MiningStats stats;
  std::vector<MinedRule> rules;

private:
  bool confidenceOk(std::size_t support, std::size_t antSupport) const {
    return static_cast<unsigned __int128>(support) * settings_.minconf.den >=
           static_cast<unsigned __int128>(settings_.minconf.num) * antSupport;
  }

  void handle(Node &node, const Node *parent, Origin origin,
              std::optional<Utility> licensing);
  void extend(const Node &node, Side side);
  void expandClass(const Node &node, Side side, std::span<const Hit> hits,
                   std::uint8_t digit, Utility licensing);

  const PreparedDatabase &db_;
  const Settings &settings_;
  SynchronizedObserver &observer_;

  // Scratch for the per-label first pass in extend().
  std::vector<Utility> labelSum_;
  std::vector<Utility> labelCur_;
  std::vector<std::uint64_t> labelStamp_;
  std::vector<std::uint8_t> labelKeep_;
  std::vector<LabelId> touched_;
  std::uint64_t stamp_ = 0;
};

template <typename Fn> void Worker::buildSeeds(LabelId a, Fn &&fn) {
  auto antOcc = std::make_shared<OccurrenceList>(1);
  struct SeedHit {
    LabelId c;
    std::uint8_t digit;
    std::uint32_t seq;
    Pos i;
    Pos j;
  };
  std::vector<SeedHit> hits;
  for (std::uint32_t s : db_.sequencesWithLabel[a]) {
    const PreparedSequence &S = db_.seqs[s];
    for (const auto &[label, i] : S.positionsOf(a)) {
      const Pos one[1] = {i};
      antOcc->push(s, one, S.utility[i]);
      for (Pos j = S.nextStart[i]; j < S.size(); ++j)
        hits.push_back({S.label[j], S.relation(i, j), s, i, j});
    }
  }
  // Stable counting sort by (consequent label, digit): linear in the hits.
  {
    std::vector<std::size_t> start(db_.labelNames.size() * kRelationCount + 1, 0);
    for (const SeedHit &h : hits)
      ++start[h.c * kRelationCount + h.digit + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<SeedHit> sorted(hits.size());
    for (const SeedHit &h : hits)
      sorted[start[h.c * kRelationCount + h.digit]++] = h;
    hits.swap(sorted);
  }
  const std::size_t antSupport = db_.sequencesWithLabel[a].size();
  for (std::size_t b = 0; b < hits.size();) {
    std::size_t e = b;
    while (e < hits.size() && hits[e].c == hits[b].c &&
           hits[e].digit == hits[b].digit)
      ++e;
    Node seed;
    seed.labels = {a, hits[b].c};
    seed.antSize = 1;
    seed.digits = {hits[b].digit};
    seed.occ = OccurrenceList(2);
    for (std::size_t h = b; h < e; ++h) {
      const PreparedSequence &S = db_.seqs[hits[h].seq];
      const Pos p[2] = {hits[h].i, hits[h].j};
      seed.occ.push(hits[h].seq, p,
                    S.utility[hits[h].i] + S.utility[hits[h].j]);
    }
    seed.antOcc = antOcc;
    seed.antSupport = antSupport;
    evaluate(seed);
    fn(seed);
    b = e;
  }
}

void Worker::evaluate(Node &node) const {
  const std::uint32_t n = node.size();
  const std::uint32_t k = node.antSize;
  node.utility = 0;
  node.aulBound = 0;
  node.culBound = 0;
  node.support = node.occ.groups();
  for (std::size_t g = 0; g < node.occ.groups(); ++g) {
    const PreparedSequence &S = db_.seqs[node.occ.groupSequence(g)];
    Utility bestU = 0, bestA = 0, bestC = 0;
    for (std::size_t o = node.occ.groupBegin(g); o < node.occ.groupEnd(g);
         ++o) {
      const Pos *p = node.occ.at(o);
      const Utility u = node.occ.utility(o);
      const Utility right = S.ru[p[n - 1]];
      const Utility left = S.range(p[k - 1] + 1, S.sstp[p[k]]);
      bestU = std::max(bestU, u);
      bestC = std::max(bestC, u + right);
      bestA = std::max(bestA, u + left + right);
    }
    node.utility += bestU;
    node.aulBound += bestA;
    node.culBound += bestC;
  }
}

IntervalRule Worker::toRule(const Node &node) const {
  IntervalRule rule;
  for (std::uint32_t i = 0; i < node.size(); ++i) {
    const std::string &name = db_.labelNames[node.labels[i]];
    (i < node.antSize ? rule.antecedent : rule.consequent).push_back(name);
  }
  std::vector<TemporalRelation> column;
  for (std::uint32_t j = 1; j < node.size(); ++j) {
    column.clear();
    for (std::uint32_t i = 0; i < j; ++i)
      column.push_back(static_cast<TemporalRelation>(node.digit(i, j)));
    rule.relations.push_back(RelationCode::fromDigits(column));
  }
  return rule;
}

void Worker::handle(Node &node, const Node *parent, Origin origin,
                    std::optional<Utility> licensing) {
  ++stats.candidatesGenerated;
  const bool confOk = confidenceOk(node.support, node.antSupport);
  if (observer_.active()) {
    CandidateEvent ev;
    ev.rule = toRule(node);
    ev.origin = origin;
    ev.utility = node.utility;
    ev.support = node.support;
    ev.antecedentSupport = node.antSupport;
    ev.aulBound = node.aulBound;
    ev.culBound = node.culBound;
    ev.licensingBound = licensing;
    if (parent != nullptr) {
      ev.parent = toRule(*parent);
      ev.parentSupport = parent->support;
      ev.parentAntecedentSupport = parent->antSupport;
    }
    observer_.candidate(ev);
  }
  if (node.utility >= settings_.minutil && confOk) {
    rules.push_back({toRule(node), node.utility, node.support, node.antSupport});
    ++stats.rulesOutput;
  }
  if (node.size() >= settings_.maxSize)
    return;
  if (origin != Origin::Right) {
    if (node.aulBound >= settings_.minutil)
      extend(node, Side::Left);
    else
      ++stats.prunedByLERSPEU;
  }
  if (!confOk)
    ++stats.prunedByConfidence;
  else if (node.culBound >= settings_.minutil)
    extend(node, Side::Right);
  else
    ++stats.prunedByRERSPEU;
}

void Worker::extend(const Node &node, Side side) {
  const std::uint32_t n = node.size();
  const std::uint32_t k = node.antSize;
  const bool left = side == Side::Left;
  // Pass 1: per-label naive bound (sum over sequences of the best hit) with
  // flat scratch arrays; labels below minutil never materialize hits.
  auto forEachHit = [&](auto &&fn) {
    for (std::size_t g = 0; g < node.occ.groups(); ++g) {
      const PreparedSequence &S = db_.seqs[node.occ.groupSequence(g)];
      ++stamp_;
      for (std::size_t o = node.occ.groupBegin(g); o < node.occ.groupEnd(g);
           ++o) {
        const Pos *p = node.occ.at(o);
        const Utility u = node.occ.utility(o);
        const Pos anchor = left ? p[k - 1] : p[n - 1];
        const Pos hi = left ? S.sstp[p[k]] : S.size();
        const Utility right = left ? S.ru[p[n - 1]] : 0;
        for (Pos q = anchor + 1; q < hi; ++q)
          fn(S, g, o, anchor, q, u + S.range(q, hi) + right);
      }
    }
  };
  touched_.clear();
  forEachHit([&](const PreparedSequence &S, std::size_t, std::size_t, Pos,
                 Pos q, Utility bound) {
    const LabelId l = S.label[q];
    if (labelSum_[l] == 0 && labelCur_[l] == 0)
      touched_.push_back(l);
    if (labelStamp_[l] != stamp_) {
      labelSum_[l] += labelCur_[l];
      labelCur_[l] = 0;
      labelStamp_[l] = stamp_;
    }
    labelCur_[l] = std::max(labelCur_[l], bound);
  });
  std::size_t survivors = 0;
  for (LabelId l : touched_) {
    const Utility naive = labelSum_[l] + labelCur_[l];
    labelSum_[l] = labelCur_[l] = 0;
    if (naive < settings_.minutil) {
      ++(left ? stats.prunedByLERSPEU : stats.prunedByRERSPEU);
    } else {
      labelKeep_[l] = 1;
      ++survivors;
    }
  }
  if (survivors == 0)
    return;

  std::vector<Hit> hits;
  forEachHit([&](const PreparedSequence &S, std::size_t g, std::size_t o,
                 Pos anchor, Pos q, Utility bound) {
    if (labelKeep_[S.label[q]])
      hits.push_back({S.label[q], S.relation(anchor, q), q,
                      static_cast<std::uint32_t>(g),
                      static_cast<std::uint32_t>(o), bound});
  });
  for (LabelId l : touched_)
    labelKeep_[l] = 0;
  std::stable_sort(hits.begin(), hits.end(), [](const Hit &x, const Hit &y) {
    return x.label < y.label;
  });

  for (std::size_t b = 0; b < hits.size();) {
    std::size_t e = b;
    while (e < hits.size() && hits[e].label == hits[b].label)
      ++e;
    const std::span<const Hit> run(hits.data() + b, e - b);
    b = e;

    // Per-sequence maxima: overall (naive) and per relation digit with the
    // last antecedent (left) or last consequent (right) interval.
    Utility naive = 0;
    std::array<Utility, kRelationCount> rub{};
    {
      std::uint32_t group = run.front().group;
      Utility best = 0;
      std::array<Utility, kRelationCount> bestDigit{};
      auto flush = [&] {
        naive += best;
        for (int d = 0; d < kRelationCount; ++d)
          rub[d] += bestDigit[d];
        best = 0;
        bestDigit.fill(0);
      };
      for (const Hit &h : run) {
        if (h.group != group) {
          flush();
          group = h.group;
        }
        best = std::max(best, h.bound);
        bestDigit[h.digit] = std::max(bestDigit[h.digit], h.bound);
      }
      flush();
    }

    if (!settings_.complement) {
      for (int d = 0; d < kRelationCount; ++d)
        if (rub[d] > 0)
          expandClass(node, side, run, static_cast<std::uint8_t>(d), naive);
      continue;
    }

    Utility remaining = std::accumulate(rub.begin(), rub.end(), Utility{0});
    const Utility initial = remaining;
    for (int d = 0; d < kRelationCount; ++d) {
      if (rub[d] == 0)
        continue;
      const bool expand = rub[d] >= settings_.minutil;
      if (expand)
        expandClass(node, side, run, static_cast<std::uint8_t>(d), rub[d]);
      else
        ++stats.prunedByComplement;
      remaining -= rub[d];
      const bool stop = remaining < settings_.minutil;
      if (observer_.active()) {
        DigitClassEvent ev;
        ev.parent = toRule(node);
        ev.side = side;
        ev.label = db_.labelNames[run.front().label];
        ev.digit = d;
        ev.naiveBound = naive;
        ev.initialBound = initial;
        ev.rub = rub[d];
        ev.remainingAfter = remaining;
        ev.expanded = expand;
        ev.stopped = stop;
        observer_.digitClass(ev);
      }
      if (stop) {
        for (int rest = d + 1; rest < kRelationCount; ++rest)
          if (rub[rest] > 0)
            ++stats.prunedByComplement;
        break;
      }
    }
  }
}

void Worker::expandClass(const Node &node, Side side, std::span<const Hit> run,
                         std::uint8_t digit, Utility licensing) {
  const std::uint32_t n = node.size();
  const std::uint32_t k = node.antSize;
  const bool left = side == Side::Left;
  const LabelId label = run.front().label;

  std::vector<const Hit *> selected;
  for (const Hit &h : run)
    if (h.digit == digit)
      selected.push_back(&h);

  // Full relation signature of the new interval against every rule interval,
  // indexed by the parent's interval index.
  std::vector<std::uint8_t> sigs(selected.size() * n);
  for (std::size_t s = 0; s < selected.size(); ++s) {
    const Hit &h = *selected[s];
    const PreparedSequence &S = db_.seqs[node.occ.groupSequence(h.group)];
    const Pos *p = node.occ.at(h.occ);
    std::uint8_t *sig = &sigs[s * n];
    for (std::uint32_t i = 0; i < n; ++i) {
      if (left && i >= k)
        sig[i] = S.relation(h.q, p[i]);
      else
        sig[i] = S.relation(p[i], h.q);
    }
  }
  std::vector<std::uint32_t> order(selected.size());
  std::iota(order.begin(), order.end(), 0);
  auto sigLess = [&](std::uint32_t x, std::uint32_t y) {
    return std::lexicographical_compare(&sigs[x * n], &sigs[x * n] + n,
                                        &sigs[y * n], &sigs[y * n] + n);
  };
  std::stable_sort(order.begin(), order.end(), sigLess);

  // Left extensions change the antecedent: collect occurrences of every
  // antecedent + label pattern whose last digit is this class's digit.
  std::map<std::vector<std::uint8_t>, std::shared_ptr<OccurrenceList>> antTable;
  if (left) {
    struct AntHit {
      std::uint32_t group;
      std::uint32_t occ;
      Pos q;
    };
    std::vector<AntHit> antHits;
    std::vector<std::uint8_t> antSigs;
    const OccurrenceList &ant = *node.antOcc;
    for (std::size_t g = 0; g < ant.groups(); ++g) {
      const PreparedSequence &S = db_.seqs[ant.groupSequence(g)];
      const auto positions = S.positionsOf(label);
      if (positions.empty())
        continue;
      for (std::size_t o = ant.groupBegin(g); o < ant.groupEnd(g); ++o) {
        const Pos *a = ant.at(o);
        for (const auto &[l, q] : positions) {
          if (q <= a[k - 1] || S.relation(a[k - 1], q) != digit)
            continue;
          antHits.push_back({static_cast<std::uint32_t>(g),
                             static_cast<std::uint32_t>(o), q});
          for (std::uint32_t i = 0; i < k; ++i)
            antSigs.push_back(S.relation(a[i], q));
        }
      }
    }
    std::vector<std::uint32_t> antOrder(antHits.size());
    std::iota(antOrder.begin(), antOrder.end(), 0);
    std::stable_sort(antOrder.begin(), antOrder.end(),
                     [&](std::uint32_t x, std::uint32_t y) {
                       return std::lexicographical_compare(
                           &antSigs[x * k], &antSigs[x * k] + k,
                           &antSigs[y * k], &antSigs[y * k] + k);
                     });
    std::vector<Pos> buffer(k + 1);
    for (std::size_t b = 0; b < antOrder.size();) {
      std::size_t e = b;
      const std::uint8_t *key = &antSigs[antOrder[b] * k];
      while (e < antOrder.size() &&
             std::equal(key, key + k, &antSigs[antOrder[e] * k]))
        ++e;
      auto list = std::make_shared<OccurrenceList>(k + 1);
      for (std::size_t x = b; x < e; ++x) {
        const AntHit &h = antHits[antOrder[x]];
        const std::uint32_t seq = ant.groupSequence(h.group);
        const Pos *a = ant.at(h.occ);
        std::copy(a, a + k, buffer.begin());
        buffer[k] = h.q;
        list->push(seq, buffer, ant.utility(h.occ) + db_.seqs[seq].utility[h.q]);
      }
      antTable.emplace(std::vector<std::uint8_t>(key, key + k), std::move(list));
      b = e;
    }
  }

  std::vector<Pos> buffer(n + 1);
  for (std::size_t b = 0; b < order.size();) {
    std::size_t e = b;
    const std::uint8_t *sig = &sigs[order[b] * n];
    while (e < order.size() && std::equal(sig, sig + n, &sigs[order[e] * n]))
      ++e;

    Node child;
    child.occ = OccurrenceList(n + 1);
    const std::uint32_t at = left ? k : n;
    child.labels = node.labels;
    child.labels.insert(child.labels.begin() + at, label);
    child.antSize = left ? k + 1 : k;
    child.digits.assign(static_cast<std::size_t>(n + 1) * n / 2, 0);
    auto parentIndex = [&](std::uint32_t c) { return c < at ? c : c - 1; };
    for (std::uint32_t j = 1; j <= n; ++j)
      for (std::uint32_t i = 0; i < j; ++i) {
        std::uint8_t d;
        if (i == at)
          d = sig[parentIndex(j)];
        else if (j == at)
          d = sig[i];
        else
          d = node.digit(parentIndex(i), parentIndex(j));
        child.digits[static_cast<std::size_t>(j) * (j - 1) / 2 + i] = d;
      }

    for (std::size_t x = b; x < e; ++x) {
      const Hit &h = *selected[order[x]];
      const std::uint32_t seq = node.occ.groupSequence(h.group);
      const Pos *p = node.occ.at(h.occ);
      std::copy(p, p + at, buffer.begin());
      buffer[at] = h.q;
      std::copy(p + at, p + n, buffer.begin() + at + 1);
      child.occ.push(seq, buffer,
                     node.occ.utility(h.occ) + db_.seqs[seq].utility[h.q]);
    }

    if (left) {
      auto it = antTable.find(std::vector<std::uint8_t>(sig, sig + k));
      child.antOcc = it->second;
      child.antSupport = it->second->groups();
    } else {
      child.antSupport = node.antSupport;
    }
    evaluate(child);
    handle(child, &node, left ? Origin::Left : Origin::Right, licensing);
    b = e;
  }
}

Settings makeSettings(const MiningConfig &cfg, Utility minutil) {
  if (cfg.minconf > Rational{1, 1})
    throw std::invalid_argument("minconf must lie in [0, 1]");
  if (cfg.maxRuleSize && *cfg.maxRuleSize < 2)
    throw std::invalid_argument("maxRuleSize must be >= 2");
  Settings s;
  s.minutil = minutil;
  s.minconf = cfg.minconf;
  s.complement = cfg.enableComplementPruning;
  if (cfg.maxRuleSize)
    s.maxSize = *cfg.maxRuleSize;
  return s;
}

} // namespace

MiningResult mine(const IntervalDatabase &db, const MiningConfig &cfg) {
  const auto start = std::chrono::steady_clock::now();
  MiningResult result;
  result.minutil = cfg.minutil.resolve(db.totalUtility());
  const Settings settings = makeSettings(cfg, result.minutil);

  PruneResult pruned = pruneUnpromisingDetailed(db, result.minutil);
  const PreparedDatabase prepared =
      prepare(pruned.database, cfg.enableEncodedRelations);
  SynchronizedObserver observer(cfg.observer);

  const auto labelCount = static_cast<LabelId>(prepared.labelNames.size());
  const unsigned threads =
      std::max(1u, std::min<unsigned>(cfg.threads, std::max<LabelId>(labelCount, 1)));
  std::vector<Worker> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    workers.emplace_back(prepared, settings, observer);

  std::atomic<LabelId> next{0};
  auto run = [&](Worker &w) {
    for (LabelId a = next++; a < labelCount; a = next++)
      w.processAntecedent(a);
  };
  if (threads == 1) {
    run(workers.front());
  } else {
    std::vector<std::thread> pool;
    for (Worker &w : workers)
      pool.emplace_back(run, std::ref(w));
    for (std::thread &t : pool)
      t.join();
  }

  for (Worker &w : workers) {
    result.stats += w.stats;
    result.rules.insert(result.rules.end(),
                        std::make_move_iterator(w.rules.begin()),
                        std::make_move_iterator(w.rules.end()));
  }
  sortRules(result.rules);
  result.stats.prunedBySEU = pruned.labelsRemoved;
  result.stats.wallTime = std::chrono::steady_clock::now() - start;
  return result;
}

std::vector<SeedRule> seedRules(const IntervalDatabase &db,
                                const MiningConfig &cfg) {
  const Settings settings =
      makeSettings(cfg, cfg.minutil.resolve(db.totalUtility()));
  const PreparedDatabase prepared = prepare(db, cfg.enableEncodedRelations);
  SynchronizedObserver observer(nullptr);
  Worker worker(prepared, settings, observer);
  std::vector<SeedRule> out;
  for (LabelId a = 0; a < prepared.labelNames.size(); ++a) {
    worker.buildSeeds(a, [&](Node &seed) {
      SeedRule sr;
      sr.mined = {worker.toRule(seed), seed.utility, seed.support,
                  seed.antSupport};
      std::size_t g = 0;
      const OccurrenceList &ant = *seed.antOcc;
      for (std::size_t ag = 0; ag < ant.groups(); ++ag) {
        const std::uint32_t s = ant.groupSequence(ag);
        const PreparedSequence &S = prepared.seqs[s];
        AULEntry entry{S.sid, false, 0};
        if (g < seed.occ.groups() && seed.occ.groupSequence(g) == s) {
          entry.iro = true;
          Utility bestA = 0, bestC = 0;
          for (std::size_t o = seed.occ.groupBegin(g);
               o < seed.occ.groupEnd(g); ++o) {
            const Pos *p = seed.occ.at(o);
            const Utility u = seed.occ.utility(o);
            bestA = std::max(bestA, u + S.range(p[0] + 1, S.sstp[p[1]]) +
                                        S.ru[p[1]]);
            bestC = std::max(bestC, u + S.ru[p[1]]);
          }
          entry.ub = bestA;
          sr.cul.push_back({S.sid, bestC});
          ++g;
        }
        sr.aul.push_back(entry);
      }
      out.push_back(std::move(sr));
    });
  }
  return out;
}

// Reference (non-incremental) computations over explicit occurrences.

std::vector<std::size_t> extendableIntervals(const RuleOccurrence &occ,
                                             std::size_t antecedentSize,
                                             const ESequenceArray &array,
                                             Side side) {
  std::vector<std::size_t> out;
  const auto &p = occ.positions;
  if (side == Side::Left) {
    const std::size_t hi = array.sstp[p[antecedentSize]];
    for (std::size_t q = p[antecedentSize - 1] + 1; q < hi; ++q)
      out.push_back(q);
  } else {
    for (std::size_t q = p.back() + 1; q < array.size(); ++q)
      out.push_back(q);
  }
  return out;
}

namespace {

Utility extensionBound(const IntervalRule &rule, const ESequence &seq,
                       const std::optional<std::string> &extension,
                       Side side) {
  const ESequenceArray array = buildArray(seq);
  Utility best = 0;
  forEachOccurrence(rule, seq, [&](const RuleOccurrence &occ) {
    const auto ext =
        extendableIntervals(occ, rule.antecedent.size(), array, side);
    std::size_t from = 0;
    if (extension) {
      while (from < ext.size() && array.labels[ext[from]] != *extension)
        ++from;
      if (from == ext.size())
        return;
    }
    Utility sum = occ.utility;
    for (std::size_t i = from; i < ext.size(); ++i)
      sum += array.utility[ext[i]];
    best = std::max(best, sum);
  });
  return best;
}

} // namespace

Utility computeLERSPEU(const IntervalRule &rule, const ESequence &seq,
                       const std::optional<std::string> &extension) {
  return extensionBound(rule, seq, extension, Side::Left);
}

Utility computeRERSPEU(const IntervalRule &rule, const ESequence &seq,
                       const std::optional<std::string> &extension) {
  return extensionBound(rule, seq, extension, Side::Right);
}

std::vector<AULEntry> buildAUL(const IntervalRule &rule,
                               const IntervalDatabase &db) {
  std::vector<AULEntry> out;
  for (const ESequence &seq : db.sequences()) {
    if (!antecedentOccurs(rule, seq))
      continue;
    const ESequenceArray array = buildArray(seq);
    AULEntry entry{seq.sid(), false, 0};
    forEachOccurrence(rule, seq, [&](const RuleOccurrence &occ) {
      entry.iro = true;
      Utility ub = occ.utility;
      for (std::size_t q : extendableIntervals(occ, rule.antecedent.size(),
                                               array, Side::Left))
        ub += array.utility[q];
      ub += array.ru[occ.positions.back()];
      entry.ub = std::max(entry.ub, ub);
    });
    out.push_back(entry);
  }
  return out;
}

std::vector<CULEntry> buildCUL(const IntervalRule &rule,
                               const IntervalDatabase &db) {
  std::vector<CULEntry> out;
  for (const ESequence &seq : db.sequences()) {
    bool occurs = false;
    forEachOccurrence(rule, seq, [&](const RuleOccurrence &) { occurs = true; });
    if (occurs)
      out.push_back({seq.sid(), computeRERSPEU(rule, seq)});
  }
  return out;
}

Utility ruleUtility(const IntervalRule &rule, const IntervalDatabase &db) {
  Utility total = 0;
  for (const ESequence &seq : db.sequences())
    if (auto best = findBestOccurrence(rule, seq))
      total += best->best.utility;
  return total;
}

std::optional<Rational> ruleConfidence(const IntervalRule &rule,
                                       const IntervalDatabase &db) {
  std::uint64_t occurs = 0, antecedent = 0;
  for (const ESequence &seq : db.sequences()) {
    if (!antecedentOccurs(rule, seq))
      continue;
    ++antecedent;
    if (findBestOccurrence(rule, seq))
      ++occurs;
  }
  if (antecedent == 0)
    return std::nullopt;
  return Rational{occurs, antecedent};
}

Rational ruleSupport(const IntervalRule &rule, const IntervalDatabase &db) {
  std::uint64_t occurs = 0;
  for (const ESequence &seq : db.sequences())
    if (findBestOccurrence(rule, seq))
      ++occurs;
  return Rational{occurs, std::max<std::uint64_t>(db.size(), 1)};
}

} // namespace uirminer
