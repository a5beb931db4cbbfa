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

#include "uirminer/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uirminer {

void GenParams::validate() const {
  auto require = [](bool ok, const char *what) {
    if (!ok)
      throw std::invalid_argument(what);
  };
  require(numSequences >= 1, "numSequences must be >= 1");
  require(alphabetSize >= 1, "alphabetSize must be >= 1");
  require(meanSeqLen >= 1, "meanSeqLen must be >= 1");
  require(timeHorizon >= 1, "timeHorizon must be >= 1");
  require(meanDuration >= 1, "meanDuration must be >= 1");
  require(sdDuration >= 0, "sdDuration must be >= 0");
  require(std::isfinite(meanUtility) && meanUtility > 0,
          "meanUtility must be > 0");
  require(std::isfinite(sdUtility) && sdUtility >= 0, "sdUtility must be >= 0");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t sid)
    : engine_(splitmix64(seed ^ splitmix64(sid))) {}

double RandomStream::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::below(std::uint64_t n) {
  // Lemire's multiply-high; the residual bias is below 2^-40 for our ranges.
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next()) * n) >> 64);
}

double RandomStream::gaussian(double mean, double sd) {
  const double u1 = 1.0 - uniform(); // (0, 1]
  const double u2 = uniform();
  return mean +
         sd * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t RandomStream::poisson(double mean) {
  std::uint64_t total = 0;
  while (mean > 0) {
    const double chunk = std::min(mean, 16.0);
    mean -= chunk;
    const double limit = std::exp(-chunk);
    double prod = uniform();
    while (prod > limit) {
      ++total;
      prod *= uniform();
    }
  }
  return total;
}

std::string symbolLabel(std::size_t i, std::size_t alphabetSize) {
  std::size_t width = 3;
  for (std::size_t n = alphabetSize > 0 ? alphabetSize - 1 : 0; n >= 1000;
       n /= 10)
    ++width;
  std::string digits = std::to_string(i);
  if (digits.size() < width)
    digits.insert(0, width - digits.size(), '0');
  return "E" + digits;
}

IntervalDatabase generate(const GenParams &p) {
  p.validate();
  std::vector<std::string> labels;
  labels.reserve(p.alphabetSize);
  for (std::size_t i = 0; i < p.alphabetSize; ++i)
    labels.push_back(symbolLabel(i, p.alphabetSize));

  std::vector<std::vector<IntervalEvent>> raw(p.numSequences);
  for (std::size_t s = 0; s < p.numSequences; ++s) {
    RandomStream rng(p.seed, s + 1);
    const std::size_t len = std::max<std::uint64_t>(
        1, rng.poisson(static_cast<double>(p.meanSeqLen)));
    auto &events = raw[s];
    events.reserve(len);
    for (std::size_t e = 0; e < len; ++e) {
      IntervalEvent ev;
      ev.label = labels[rng.below(p.alphabetSize)];
      ev.st = static_cast<Time>(rng.below(static_cast<std::uint64_t>(p.timeHorizon)));
      const double d = std::round(rng.gaussian(static_cast<double>(p.meanDuration),
                                               static_cast<double>(p.sdDuration)));
      const Time duration = std::max<Time>(1, static_cast<Time>(d));
      ev.ft = ev.st + duration;
      const double u = std::round(static_cast<double>(duration) *
                                  rng.gaussian(p.meanUtility, p.sdUtility));
      ev.utility = std::max<Utility>(1, static_cast<Utility>(u));
      events.push_back(std::move(ev));
    }
  }
  return loadValidate(std::move(raw));
}

} // namespace uirminer
