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

#ifndef UIRMINER_DATAGEN_HPP
#define UIRMINER_DATAGEN_HPP

#include <cstdint>
#include <random>
#include <string>

#include "uirminer/model.hpp"

namespace uirminer {

struct GenParams {
  std::size_t numSequences = 1000;
  std::size_t alphabetSize = 200;
  std::size_t meanSeqLen = 32;
  Time timeHorizon = 1000;
  Time meanDuration = 50;
  Time sdDuration = 25;
  double meanUtility = 5.0;
  double sdUtility = 2.0;
  std::uint64_t seed = 42;

  // Throws std::invalid_argument.
  void validate() const;
};

// Per-sequence random stream: std::mt19937_64 seeded with
// splitmix64(seed ^ splitmix64(sid)). The distributions are implemented here
// rather than taken from <random>, whose algorithms are unspecified, so that
// output is identical across standard libraries.
class RandomStream {
public:
  RandomStream(std::uint64_t seed, std::uint64_t sid);

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  // Box-Muller, one deviate per call.
  double gaussian(double mean, double sd);
  // Knuth's multiplication method, in chunks of mean <= 16.
  std::uint64_t poisson(double mean);

private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Label for symbol i: "E" followed by i zero-padded to at least 3 digits.
std::string symbolLabel(std::size_t i, std::size_t alphabetSize);

// Deterministic for fixed params. Sequence lengths are Poisson around
// meanSeqLen (min 1), starts uniform in [0, timeHorizon), durations
// Gaussian rounded and truncated to >= 1, utilities
// max(1, round(duration * gaussian(meanUtility, sdUtility))).
IntervalDatabase generate(const GenParams &p);

} // namespace uirminer

#endif // UIRMINER_DATAGEN_HPP
