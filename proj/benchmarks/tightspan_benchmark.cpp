// Copyright 2026 The tightspan Authors
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

#include <cstddef>
#include <vector>

#include "tightspan/buneman.hpp"
#include "tightspan/metric.hpp"
#include "tightspan/oracle.hpp"
#include "tightspan/tight_span.hpp"

namespace ts = tightspan;

namespace {

// {i..i+m-1} | rest on 2m taxa.
ts::WeightedSplitSystem circular(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < 2 * m; ++x) labels.push_back("t" + std::to_string(x));
  std::vector<ts::Split> splits;
  for (std::size_t i = 1; i <= m; ++i) {
    ts::TaxonMask side = 0;
    for (std::size_t x = i; x < i + m; ++x) side |= ts::taxon_bit(x);
    splits.emplace_back(side, 2 * m);
  }
  return ts::WeightedSplitSystem(ts::GroundSet(labels), splits, std::vector<ts::Rational>(m, ts::Rational(1)));
}

ts::WeightedSplitSystem octahedral() {
  const std::vector<std::vector<std::size_t>> sides = {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 2, 4}};
  std::vector<ts::Split> splits;
  for (const auto& s : sides) {
    ts::TaxonMask side = 0;
    for (std::size_t x : s) side |= ts::taxon_bit(x);
    splits.emplace_back(side, 6);
  }
  return ts::WeightedSplitSystem(ts::GroundSet({"1", "2", "3", "4", "5", "6"}), splits,
                                 std::vector<ts::Rational>(4, ts::Rational(1)));
}

void BM_Decompose(benchmark::State& state) {
  const auto d = ts::synthesize(circular(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ts::decompose(d));
}
BENCHMARK(BM_Decompose)->DenseRange(3, 7);

void BM_Buneman(benchmark::State& state) {
  const auto sys = circular(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ts::build_buneman_complex(sys));
}
BENCHMARK(BM_Buneman)->DenseRange(3, 10);

void BM_AssembleOctahedral(benchmark::State& state) {
  const auto sys = octahedral();
  for (auto _ : state) benchmark::DoNotOptimize(ts::assemble(sys));
}
BENCHMARK(BM_AssembleOctahedral);

void BM_Assemble(benchmark::State& state) {
  const auto sys = circular(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ts::assemble(sys));
}
BENCHMARK(BM_Assemble)->DenseRange(3, 8);

void BM_Oracle(benchmark::State& state) {
  const auto d = ts::synthesize(circular(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ts::run_oracle(d, ts::kMaxOracleTaxa));
}
BENCHMARK(BM_Oracle)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
