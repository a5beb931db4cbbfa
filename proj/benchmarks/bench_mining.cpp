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

#include <benchmark/benchmark.h>

#include "uirminer/datagen.hpp"
#include "uirminer/mining.hpp"
#include "uirminer/relations.hpp"

namespace uirminer {
namespace {

const IntervalDatabase &dataset() {
  static const IntervalDatabase db = [] {
    GenParams p;
    p.numSequences = 2000;
    p.alphabetSize = 50;
    p.meanSeqLen = 16;
    p.seed = 42;
    return generate(p);
  }();
  return db;
}

// Args: complement pruning on/off, encoded relations on/off, threads.
void BM_Mine(benchmark::State &state) {
  MiningConfig cfg;
  cfg.minutil = UtilityThreshold::percent({1, 2}); // 0.5%
  cfg.enableComplementPruning = state.range(0) != 0;
  cfg.enableEncodedRelations = state.range(1) != 0;
  cfg.threads = static_cast<unsigned>(state.range(2));
  MiningStats stats;
  for (auto _ : state) {
    auto result = mine(dataset(), cfg);
    stats = result.stats;
    benchmark::DoNotOptimize(result.rules.data());
  }
  state.counters["candidates"] = static_cast<double>(stats.candidatesGenerated);
  state.counters["rules"] = static_cast<double>(stats.rulesOutput);
  state.counters["complementPruned"] =
      static_cast<double>(stats.prunedByComplement);
}
BENCHMARK(BM_Mine)
    ->ArgNames({"complement", "encoded", "threads"})
    ->Args({1, 1, 1})
    ->Args({0, 1, 1})
    ->Args({1, 0, 1})
    ->Args({1, 1, 4})
    ->Unit(benchmark::kMillisecond);

void BM_SequenceRelations(benchmark::State &state) {
  for (auto _ : state)
    for (const ESequence &s : dataset().sequences())
      benchmark::DoNotOptimize(sequenceRelations(s));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(dataset().size()));
}
BENCHMARK(BM_SequenceRelations)->Unit(benchmark::kMillisecond);

void BM_RelationMatrix(benchmark::State &state) {
  for (auto _ : state)
    for (const ESequence &s : dataset().sequences())
      benchmark::DoNotOptimize(relationMatrix(s));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(dataset().size()));
}
BENCHMARK(BM_RelationMatrix)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State &state) {
  GenParams p;
  p.numSequences = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(generate(p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Generate)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace
} // namespace uirminer

BENCHMARK_MAIN();
