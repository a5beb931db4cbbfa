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

#include "uirminer/io.hpp"

#include <algorithm>
#include <charconv>

namespace uirminer {

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

namespace {

bool isSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> splitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos)
      break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && isSpace(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && isSpace(s.back()))
    s.remove_suffix(1);
  return s;
}

template <typename Int> bool parseInt(std::string_view s, Int &out) {
  if (s.empty())
    return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace

IntervalDatabase parseDatabase(std::string_view text) {
  std::vector<std::vector<IntervalEvent>> raw;
  const auto lines = splitLines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string_view line = lines[ln];
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#')
      continue;
    std::vector<IntervalEvent> events;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && isSpace(line[i]))
        ++i;
      if (i == line.size())
        break;
      std::size_t end = i;
      while (end < line.size() && !isSpace(line[end]))
        ++end;
      const std::string_view item = line.substr(i, end - i);
      const std::size_t col = i + 1;
      auto fail = [&](const std::string &what) {
        throw ParseError(ln + 1, col,
                         "item '" + std::string(item) + "': " + what);
      };
      std::vector<std::string_view> fields;
      for (std::string_view rest = item;;) {
        const auto comma = rest.find(',');
        fields.push_back(rest.substr(0, comma));
        if (comma == std::string_view::npos)
          break;
        rest.remove_prefix(comma + 1);
      }
      if (fields.size() != 4)
        fail("expected label,st,ft,utility");
      IntervalEvent e;
      e.label = std::string(fields[0]);
      if (!isValidLabel(e.label))
        fail("invalid label");
      if (!parseInt(fields[1], e.st) || !parseInt(fields[2], e.ft) ||
          !parseInt(fields[3], e.utility))
        fail("non-integer field");
      if (e.st < 0)
        fail("negative start time");
      if (e.st >= e.ft)
        fail("st >= ft");
      if (e.utility < 1)
        fail("utility < 1");
      events.push_back(std::move(e));
      i = end;
    }
    raw.push_back(std::move(events));
  }
  return loadValidate(std::move(raw));
}

std::string writeDatabase(const IntervalDatabase &db) {
  std::string out;
  for (const ESequence &s : db.sequences()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      const IntervalEvent &e = s[i];
      if (i > 0)
        out += ' ';
      out += e.label + ',' + std::to_string(e.st) + ',' +
             std::to_string(e.ft) + ',' + std::to_string(e.utility);
    }
    out += '\n';
  }
  return out;
}

RelFormat parseRelFormat(std::string_view name) {
  if (name == "code")
    return RelFormat::Code;
  if (name == "letters")
    return RelFormat::Letters;
  if (name == "matrix")
    return RelFormat::Matrix;
  throw std::invalid_argument("unknown relation format '" + std::string(name) +
                              "'");
}

std::string_view relFormatName(RelFormat f) {
  switch (f) {
  case RelFormat::Code:
    return "code";
  case RelFormat::Letters:
    return "letters";
  case RelFormat::Matrix:
    return "matrix";
  }
  return "code";
}

namespace {

std::string joinLabels(const std::vector<std::string> &labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0)
      out += ',';
    out += labels[i];
  }
  return out + "}";
}

std::string renderRelations(const IntervalRule &rule, RelFormat format) {
  const std::size_t n = rule.size();
  std::string out;
  switch (format) {
  case RelFormat::Code:
    for (std::size_t j = 0; j < rule.relations.size(); ++j) {
      if (j > 0)
        out += ',';
      out += rule.relations[j].toBase7();
    }
    break;
  case RelFormat::Letters:
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        if (!out.empty())
          out += "; ";
        out += rule.label(i) + ' ' + relationLetter(rule.relation(i, j)) + ' ' +
               rule.label(j);
      }
    break;
  case RelFormat::Matrix:
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0)
        out += '/';
      for (std::size_t j = 0; j < n; ++j)
        out += j > i ? relationLetter(rule.relation(i, j)) : '-';
    }
    break;
  }
  return out;
}

} // namespace

std::string formatRule(const MinedRule &r, RelFormat format) {
  return joinLabels(r.rule.antecedent) + " -> " + joinLabels(r.rule.consequent) +
         " | rel=" + renderRelations(r.rule, format) +
         " | util=" + std::to_string(r.utility) +
         " | conf=" + r.confidence().toDecimal(4) +
         " | sup=" + std::to_string(r.support);
}

std::string writeRules(const std::vector<MinedRule> &rules, RelFormat format) {
  std::string out;
  for (const MinedRule &r : rules) {
    out += formatRule(r, format);
    out += '\n';
  }
  return out;
}

namespace {

class RuleLineParser {
public:
  RuleLineParser(std::string_view line, std::size_t lineNo)
      : line_(line), lineNo_(lineNo) {}

  RuleRecord parse() {
    RuleRecord rec;
    rec.rule.antecedent = labels();
    expect(" -> ");
    rec.rule.consequent = labels();
    expect(" | rel=");
    const std::string_view rel = until(" | ");
    expect(" | util=");
    if (!parseInt(until(" | "), rec.utility))
      fail("bad utility");
    expect(" | conf=");
    rec.confidence = std::string(until(" | "));
    expect(" | sup=");
    if (!parseInt(line_.substr(pos_), rec.support))
      fail("bad support");
    decodeRelations(rel, rec.rule);
    try {
      rec.rule.validate();
    } catch (const ValidationError &e) {
      fail(e.what());
    }
    return rec;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(lineNo_, pos_ + 1, what);
  }

  void expect(std::string_view token) {
    if (line_.substr(pos_, token.size()) != token)
      fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  std::string_view until(std::string_view token) {
    const auto at = line_.find(token, pos_);
    const auto end = at == std::string_view::npos ? line_.size() : at;
    std::string_view out = line_.substr(pos_, end - pos_);
    pos_ = end;
    return out;
  }

  std::vector<std::string> labels() {
    expect("{");
    const std::string_view inner = until("}");
    expect("}");
    std::vector<std::string> out;
    for (std::string_view rest = inner;;) {
      const auto comma = rest.find(',');
      std::string label(rest.substr(0, comma));
      if (!isValidLabel(label))
        fail("invalid label '" + label + "'");
      out.push_back(std::move(label));
      if (comma == std::string_view::npos)
        break;
      rest.remove_prefix(comma + 1);
    }
    return out;
  }

  TemporalRelation letter(char c) const {
    auto r = relationFromLetter(c);
    if (!r)
      fail(std::string("unknown relation letter '") + c + "'");
    return *r;
  }

  void decodeRelations(std::string_view rel, IntervalRule &rule) const {
    const std::size_t n = rule.size();
    std::vector<std::vector<TemporalRelation>> columns(n);
    if (rel.find('/') != std::string_view::npos) {
      // Matrix: n rows of n characters.
      if (rel.size() != n * (n + 1) - 1)
        fail("matrix relation has the wrong size");
      for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
          columns[j].push_back(letter(rel[i * (n + 1) + j]));
    } else if (rel.find(' ') != std::string_view::npos) {
      // Letters: "X r Y" pairs in column order.
      std::size_t j = 1, i = 0;
      for (std::string_view rest = rel;;) {
        const auto sep = rest.find("; ");
        const std::string_view pair = rest.substr(0, sep);
        if (j >= n)
          fail("too many relation pairs");
        const std::string expectPrefix = rule.label(i) + ' ';
        const std::string expectSuffix = ' ' + rule.label(j);
        if (pair.size() != expectPrefix.size() + 1 + expectSuffix.size() ||
            pair.substr(0, expectPrefix.size()) != expectPrefix ||
            pair.substr(expectPrefix.size() + 1) != expectSuffix)
          fail("relation pair '" + std::string(pair) + "' out of order");
        columns[j].push_back(letter(pair[expectPrefix.size()]));
        if (++i == j) {
          ++j;
          i = 0;
        }
        if (sep == std::string_view::npos)
          break;
        rest.remove_prefix(sep + 2);
      }
      if (j != n)
        fail("too few relation pairs");
    } else {
      std::size_t j = 1;
      for (std::string_view rest = rel;; ++j) {
        const auto comma = rest.find(',');
        if (j >= n)
          fail("too many relation codes");
        try {
          columns[j] = RelationCode::parseBase7(rest.substr(0, comma), j).digits();
        } catch (const std::invalid_argument &e) {
          fail(e.what());
        }
        if (comma == std::string_view::npos)
          break;
        rest.remove_prefix(comma + 1);
      }
      if (j != n - 1)
        fail("too few relation codes");
    }
    for (std::size_t j = 1; j < n; ++j)
      rule.relations.push_back(RelationCode::fromDigits(columns[j]));
  }

  std::string_view line_;
  std::size_t lineNo_;
  std::size_t pos_ = 0;
};

} // namespace

std::vector<RuleRecord> parseRules(std::string_view text) {
  std::vector<RuleRecord> out;
  const auto lines = splitLines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string_view line = lines[ln];
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (trim(line).empty())
      continue;
    out.push_back(RuleLineParser(line, ln + 1).parse());
  }
  return out;
}

bool sameRuleSet(std::string_view a, std::string_view b) {
  auto ra = parseRules(a);
  auto rb = parseRules(b);
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

} // namespace uirminer
