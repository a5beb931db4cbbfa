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

#ifndef UIRMINER_RELATION_CODE_HPP
#define UIRMINER_RELATION_CODE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uirminer {

// The seven Allen relations between canonically ordered intervals, with their
// base-7 digit.
enum class TemporalRelation : std::uint8_t {
  Before = 0,
  Meets = 1,
  Overlaps = 2,
  Starts = 3,
  Contains = 4,
  FinishedBy = 5,
  Equals = 6,
};

inline constexpr int kRelationCount = 7;

constexpr int digitOf(TemporalRelation r) { return static_cast<int>(r); }

// 'b', 'm', 'o', 's', 'c', 'f', 'e'.
char relationLetter(TemporalRelation r);
std::optional<TemporalRelation> relationFromLetter(char c);
std::optional<TemporalRelation> relationFromDigit(int d);

// One interval's relations to all earlier intervals, read as a base-7
// number (most significant digit = first interval). Codes of arity up to
// kMaxCompactArity are held in a 64-bit value; longer ones keep their digits.
class RelationCode {
public:
  static constexpr std::size_t kMaxCompactArity = 22;

  RelationCode() = default;
  // Throws std::invalid_argument when value >= 7^arity.
  RelationCode(std::uint64_t value, std::size_t arity);

  static RelationCode fromDigits(std::span<const TemporalRelation> digits);

  // Parses a minimal base-7 digit string ("002" and "2" are both accepted).
  static RelationCode parseBase7(std::string_view text, std::size_t arity);

  std::size_t arity() const { return arity_; }
  bool compact() const { return arity_ <= kMaxCompactArity; }
  // Throws std::logic_error for non-compact codes.
  std::uint64_t value() const;

  TemporalRelation digit(std::size_t k) const;
  std::vector<TemporalRelation> digits() const;

  // Base-7 string without leading zeros; "0" for the all-before code.
  std::string toBase7() const;

  friend bool operator==(const RelationCode &, const RelationCode &) = default;
  friend std::strong_ordering operator<=>(const RelationCode &a,
                                          const RelationCode &b);

private:
  std::size_t arity_ = 0;
  std::uint64_t value_ = 0;
  std::vector<std::uint8_t> wide_;
};

RelationCode encodeDigits(std::span<const TemporalRelation> digits);
std::vector<TemporalRelation> decodeCode(const RelationCode &code);

} // namespace uirminer

#endif // UIRMINER_RELATION_CODE_HPP
