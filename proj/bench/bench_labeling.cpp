// Copyright 2026 The xosfair Authors
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

// Serial rational reference against the OpenMP integer kernel.

#include <benchmark/benchmark.h>

#include "xosfair/generators.hpp"
#include "xosfair/labeling.hpp"

namespace {

using namespace xosfair;

labeling::Problem mms_problem(std::size_t bundles, std::size_t m) {
  labeling::Problem p;
  p.valuations = {random_xos_instance(1, m, 3, 8, 17).valuation(0)};
  p.party_valuation.assign(bundles, 0);
  return p;
}

labeling::Problem welfare_problem(std::size_t n, std::size_t m) {
  const Instance inst = random_xos_instance(n, m, 2, 8, 23);
  labeling::Problem p;
  p.valuations = inst.valuations();
  p.objective = labeling::Objective::kCappedWelfare;
  p.half_integral = true;
  for (std::size_t i = 0; i < n; ++i) {
    p.party_valuation.push_back(i);
    // Caps above any reachable value so the search cannot stop early.
    p.caps.emplace_back(1000);
  }
  return p;
}

template <typename Solve>
void run(benchmark::State& state, const labeling::Problem& p, Solve solve) {
  const EnumerationLimits limits{100'000'000};
  for (auto _ : state) benchmark::DoNotOptimize(solve(p, limits));
}

void BM_MmsReference(benchmark::State& s) {
  run(s, mms_problem(3, s.range(0)), labeling::solve_reference);
}
void BM_MmsParallel(benchmark::State& s) {
  run(s, mms_problem(3, s.range(0)), labeling::solve_parallel);
}
void BM_HalfWelfareReference(benchmark::State& s) {
  run(s, welfare_problem(3, s.range(0)), labeling::solve_reference);
}
void BM_HalfWelfareParallel(benchmark::State& s) {
  run(s, welfare_problem(3, s.range(0)), labeling::solve_parallel);
}

BENCHMARK(BM_MmsReference)->DenseRange(6, 9, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MmsParallel)->DenseRange(6, 9, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HalfWelfareReference)->DenseRange(4, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HalfWelfareParallel)->DenseRange(4, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
