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

#ifndef UIRMINER_IO_HPP
#define UIRMINER_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uirminer/mining.hpp"
#include "uirminer/model.hpp"

namespace uirminer {

// Failure while reading a database or rule file. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string &what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// One sequence per line of whitespace-separated "label,st,ft,utility" items.
// '#' lines and blank lines are skipped.
IntervalDatabase parseDatabase(std::string_view text);
std::string writeDatabase(const IntervalDatabase &db);

enum class RelFormat { Code, Letters, Matrix };

// "code", "letters" or "matrix"; throws std::invalid_argument otherwise.
RelFormat parseRelFormat(std::string_view name);
std::string_view relFormatName(RelFormat f);

// {A} -> {B,D} | rel=0,2 | util=36 | conf=0.6667 | sup=2
std::string formatRule(const MinedRule &rule, RelFormat format);
std::string writeRules(const std::vector<MinedRule> &rules, RelFormat format);

// A rule line read back from any of the three formats.
struct RuleRecord {
  IntervalRule rule;
  Utility utility = 0;
  std::string confidence;
  std::size_t support = 0;

  friend bool operator==(const RuleRecord &, const RuleRecord &) = default;
  friend auto operator<=>(const RuleRecord &a, const RuleRecord &b) {
    if (auto c = a.rule <=> b.rule; c != 0)
      return c;
    if (auto c = a.utility <=> b.utility; c != 0)
      return c;
    if (auto c = a.confidence <=> b.confidence; c != 0)
      return c;
    return a.support <=> b.support;
  }
};

std::vector<RuleRecord> parseRules(std::string_view text);

// Order-insensitive comparison of two rule files.
bool sameRuleSet(std::string_view a, std::string_view b);

} // namespace uirminer

#endif // UIRMINER_IO_HPP
