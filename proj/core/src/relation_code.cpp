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

#include "uirminer/relation_code.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace uirminer {

namespace {

constexpr std::array<char, kRelationCount> kLetters = {'b', 'm', 'o', 's',
                                                       'c', 'f', 'e'};

constexpr std::array<std::uint64_t, RelationCode::kMaxCompactArity + 1>
makePowers() {
  std::array<std::uint64_t, RelationCode::kMaxCompactArity + 1> p{};
  p[0] = 1;
  for (std::size_t i = 1; i < p.size(); ++i)
    p[i] = p[i - 1] * 7;
  return p;
}

constexpr auto kPow7 = makePowers();

} // namespace

char relationLetter(TemporalRelation r) { return kLetters[digitOf(r)]; }

std::optional<TemporalRelation> relationFromLetter(char c) {
  for (int d = 0; d < kRelationCount; ++d)
    if (kLetters[d] == c)
      return static_cast<TemporalRelation>(d);
  return std::nullopt;
}

std::optional<TemporalRelation> relationFromDigit(int d) {
  if (d < 0 || d >= kRelationCount)
    return std::nullopt;
  return static_cast<TemporalRelation>(d);
}

RelationCode::RelationCode(std::uint64_t value, std::size_t arity)
    : arity_(arity), value_(value) {
  if (arity > kMaxCompactArity) {
    // Expand into digits; any 64-bit value fits below 7^23.
    wide_.assign(arity, 0);
    for (std::size_t k = arity; k-- > 0 && value > 0;) {
      wide_[k] = static_cast<std::uint8_t>(value % 7);
      value /= 7;
    }
    value_ = 0;
    return;
  }
  if (value >= kPow7[arity])
    throw std::invalid_argument("relation code value " +
                                std::to_string(value) +
                                " does not fit in arity " +
                                std::to_string(arity));
}

RelationCode RelationCode::fromDigits(std::span<const TemporalRelation> digits) {
  RelationCode code;
  code.arity_ = digits.size();
  if (code.compact()) {
    for (TemporalRelation d : digits)
      code.value_ = code.value_ * 7 + static_cast<std::uint64_t>(digitOf(d));
  } else {
    code.wide_.reserve(digits.size());
    for (TemporalRelation d : digits)
      code.wide_.push_back(static_cast<std::uint8_t>(digitOf(d)));
  }
  return code;
}

RelationCode RelationCode::parseBase7(std::string_view text,
                                      std::size_t arity) {
  if (text.empty())
    throw std::invalid_argument("empty relation code");
  std::size_t first = text.find_first_not_of('0');
  std::string_view significant =
      first == std::string_view::npos ? std::string_view{} : text.substr(first);
  if (significant.size() > arity)
    throw std::invalid_argument("relation code '" + std::string(text) +
                                "' has more digits than arity " +
                                std::to_string(arity));
  std::vector<TemporalRelation> digits(arity, TemporalRelation::Before);
  std::size_t offset = arity - significant.size();
  for (std::size_t i = 0; i < significant.size(); ++i) {
    int d = significant[i] - '0';
    auto rel = relationFromDigit(d);
    if (!rel)
      throw std::invalid_argument("invalid base-7 digit in '" +
                                  std::string(text) + "'");
    digits[offset + i] = *rel;
  }
  return fromDigits(digits);
}

std::uint64_t RelationCode::value() const {
  if (!compact())
    throw std::logic_error("relation code of arity " + std::to_string(arity_) +
                           " has no 64-bit value");
  return value_;
}

TemporalRelation RelationCode::digit(std::size_t k) const {
  if (k >= arity_)
    throw std::out_of_range("relation digit index out of range");
  if (!compact())
    return static_cast<TemporalRelation>(wide_[k]);
  return static_cast<TemporalRelation>((value_ / kPow7[arity_ - 1 - k]) % 7);
}

std::vector<TemporalRelation> RelationCode::digits() const {
  std::vector<TemporalRelation> out(arity_);
  if (!compact()) {
    for (std::size_t k = 0; k < arity_; ++k)
      out[k] = static_cast<TemporalRelation>(wide_[k]);
    return out;
  }
  std::uint64_t v = value_;
  for (std::size_t k = arity_; k-- > 0;) {
    out[k] = static_cast<TemporalRelation>(v % 7);
    v /= 7;
  }
  return out;
}

std::string RelationCode::toBase7() const {
  std::string s;
  for (TemporalRelation d : digits()) {
    if (s.empty() && d == TemporalRelation::Before)
      continue;
    s.push_back(static_cast<char>('0' + digitOf(d)));
  }
  return s.empty() ? std::string("0") : s;
}

std::strong_ordering operator<=>(const RelationCode &a, const RelationCode &b) {
  if (auto c = a.arity_ <=> b.arity_; c != 0)
    return c;
  if (a.compact())
    return a.value_ <=> b.value_;
  return a.wide_ <=> b.wide_;
}

RelationCode encodeDigits(std::span<const TemporalRelation> digits) {
  return RelationCode::fromDigits(digits);
}

std::vector<TemporalRelation> decodeCode(const RelationCode &code) {
  return code.digits();
}

} // namespace uirminer
