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

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "uirminer/datagen.hpp"
#include "uirminer/io.hpp"
#include "uirminer/mining.hpp"
#include "uirminer/oracle.hpp"

namespace uirminer {

namespace {

constexpr int kExitDiffer = 1;
constexpr int kExitError = 2;

std::string readFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeOutput(const std::string &path, const std::string &text,
                 std::ostream &fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f)
    throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  if (!f)
    throw std::runtime_error("error writing '" + path + "'");
}

IntervalDatabase loadDatabase(const std::string &path) {
  const std::string text = readFile(path);
  try {
    return parseDatabase(text);
  } catch (const ParseError &e) {
    throw std::runtime_error(path + ": " + e.what());
  } catch (const ValidationError &e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

// Flags shared by mine and oracle.
struct ThresholdOptions {
  std::optional<Utility> minutil;
  std::string minutilPct;
  std::string minconf;

  void add(CLI::App &cmd) {
    auto *abs = cmd.add_option("--minutil", minutil, "Absolute minimum utility");
    auto *pct = cmd.add_option("--minutil-pct", minutilPct,
                               "Minimum utility as a percentage of the total");
    abs->excludes(pct);
    cmd.add_option("--minconf", minconf, "Minimum confidence, e.g. 0.6 or 2/3")
        ->required();
  }

  UtilityThreshold threshold() const {
    if (minutil)
      return UtilityThreshold::absolute(*minutil);
    if (!minutilPct.empty()) {
      Rational pct;
      try {
        pct = Rational::parse(minutilPct);
      } catch (const std::invalid_argument &) {
        throw std::invalid_argument("percentage out of range [0, 100]: '" +
                                    minutilPct + "'");
      }
      return UtilityThreshold::percent(pct);
    }
    throw std::invalid_argument("one of --minutil or --minutil-pct is required");
  }

  Rational confidence() const {
    const Rational c = Rational::parse(minconf);
    if (c > Rational{1, 1})
      throw std::invalid_argument("--minconf must lie in [0, 1]");
    return c;
  }
};

std::size_t distinctLabels(const IntervalDatabase &db) {
  std::set<std::string> labels;
  for (const ESequence &s : db.sequences())
    for (const IntervalEvent &e : s.events())
      labels.insert(e.label);
  return labels.size();
}

} // namespace

int runCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Utility-driven interval rule mining"};
  app.name("uirminer");
  app.require_subcommand(1);

  // mine
  auto *mineCmd = app.add_subcommand("mine", "Mine utility-driven interval rules");
  std::string input, output, statsPath, relFormat = "code";
  ThresholdOptions mineThresholds;
  bool noComplement = false, noEncoded = false;
  std::optional<std::size_t> maxRuleSize;
  unsigned threads = 1;
  mineCmd->add_option("--input", input, "Database file")->required();
  mineThresholds.add(*mineCmd);
  mineCmd->add_option("--output", output, "Rule file (default: stdout)");
  mineCmd->add_option("--stats", statsPath, "Write run statistics as JSON");
  mineCmd->add_option("--rel-format", relFormat, "code, letters or matrix")
      ->check(CLI::IsMember({"code", "letters", "matrix"}));
  mineCmd->add_flag("--no-complement-pruning", noComplement,
                    "Disable utility complement pruning");
  mineCmd->add_flag("--no-encoded-relations", noEncoded,
                    "Build per-sequence relations from the dense matrix");
  mineCmd->add_option("--max-rule-size", maxRuleSize,
                      "Largest rule size to explore")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  mineCmd->add_option("--threads", threads, "Worker threads")
      ->check(CLI::Range(1u, 1024u));

  // oracle
  auto *oracleCmd =
      app.add_subcommand("oracle", "Brute-force mining for small databases");
  std::string oracleInput, oracleOutput, oracleFormat = "code";
  ThresholdOptions oracleThresholds;
  std::size_t maxSize = 4;
  oracleCmd->add_option("--input", oracleInput, "Database file")->required();
  oracleThresholds.add(*oracleCmd);
  oracleCmd->add_option("--max-size", maxSize, "Largest rule size")
      ->check(CLI::Range(std::size_t{2}, kOracleMaxSize));
  oracleCmd->add_option("--output", oracleOutput, "Rule file (default: stdout)");
  oracleCmd->add_option("--rel-format", oracleFormat, "code, letters or matrix")
      ->check(CLI::IsMember({"code", "letters", "matrix"}));

  // gen
  auto *genCmd = app.add_subcommand("gen", "Generate a synthetic database");
  GenParams gp;
  std::string genOutput;
  genCmd->add_option("--num-sequences", gp.numSequences, "Number of sequences")
      ->capture_default_str();
  genCmd->add_option("--alphabet-size", gp.alphabetSize, "Distinct labels")
      ->capture_default_str();
  genCmd->add_option("--mean-seq-len", gp.meanSeqLen, "Mean events per sequence")
      ->capture_default_str();
  genCmd->add_option("--time-horizon", gp.timeHorizon, "Start times in [0, H)")
      ->capture_default_str();
  genCmd->add_option("--mean-duration", gp.meanDuration, "Mean interval length")
      ->capture_default_str();
  genCmd->add_option("--sd-duration", gp.sdDuration, "Interval length sd")
      ->capture_default_str();
  genCmd->add_option("--mean-utility", gp.meanUtility,
                     "Mean utility per time unit")
      ->capture_default_str();
  genCmd->add_option("--sd-utility", gp.sdUtility, "Utility sd per time unit")
      ->capture_default_str();
  genCmd->add_option("--seed", gp.seed, "Random seed")->capture_default_str();
  genCmd->add_option("--output", genOutput, "Database file (default: stdout)");

  // verify
  auto *verifyCmd =
      app.add_subcommand("verify", "Compare two rule files as sets");
  std::string fileA, fileB;
  verifyCmd->add_option("--a", fileA, "First rule file")->required();
  verifyCmd->add_option("--b", fileB, "Second rule file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*mineCmd) {
      MiningConfig cfg;
      cfg.minutil = mineThresholds.threshold();
      cfg.minconf = mineThresholds.confidence();
      const IntervalDatabase db = loadDatabase(input);
      cfg.enableComplementPruning = !noComplement;
      cfg.enableEncodedRelations = !noEncoded;
      cfg.maxRuleSize = maxRuleSize;
      cfg.threads = threads;
      const MiningResult result = mine(db, cfg);
      writeOutput(output, writeRules(result.rules, parseRelFormat(relFormat)),
                  out);
      if (!statsPath.empty()) {
        const MiningStats &s = result.stats;
        nlohmann::ordered_json j;
        j["input"] = input;
        j["sequences"] = db.size();
        j["events"] = db.eventCount();
        j["labels"] = distinctLabels(db);
        j["totalUtility"] = db.totalUtility();
        j["minutil"] = result.minutil;
        j["minconf"] = cfg.minconf.toDecimal(4);
        j["complementPruning"] = cfg.enableComplementPruning;
        j["encodedRelations"] = cfg.enableEncodedRelations;
        j["maxRuleSize"] = maxRuleSize ? nlohmann::ordered_json(*maxRuleSize)
                                       : nlohmann::ordered_json(nullptr);
        j["threads"] = threads;
        j["relFormat"] = relFormat;
        j["candidatesGenerated"] = s.candidatesGenerated;
        j["rulesOutput"] = s.rulesOutput;
        j["prunedBySEU"] = s.prunedBySEU;
        j["prunedByLERSPEU"] = s.prunedByLERSPEU;
        j["prunedByRERSPEU"] = s.prunedByRERSPEU;
        j["prunedByComplement"] = s.prunedByComplement;
        j["prunedByConfidence"] = s.prunedByConfidence;
        j["wallTimeMs"] =
            std::chrono::duration<double, std::milli>(s.wallTime).count();
        writeOutput(statsPath, j.dump(2) + "\n", out);
      }
      return 0;
    }
    if (*oracleCmd) {
      const UtilityThreshold threshold = oracleThresholds.threshold();
      const Rational minconf = oracleThresholds.confidence();
      const IntervalDatabase db = loadDatabase(oracleInput);
      const auto rules =
          oracleMine(db, threshold.resolve(db.totalUtility()), minconf, maxSize);
      writeOutput(oracleOutput, writeRules(rules, parseRelFormat(oracleFormat)),
                  out);
      return 0;
    }
    if (*genCmd) {
      writeOutput(genOutput, writeDatabase(generate(gp)), out);
      return 0;
    }
    if (*verifyCmd) {
      const std::string a = readFile(fileA);
      const std::string b = readFile(fileB);
      if (sameRuleSet(a, b)) {
        out << "equal\n";
        return 0;
      }
      out << "different\n";
      return kExitDiffer;
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

} // namespace uirminer
