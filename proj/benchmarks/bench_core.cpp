// Copyright 2026 The nmds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "nmds/code.hpp"
#include "nmds/primes.hpp"
#include "nmds/solver.hpp"

namespace {

using namespace nmds;

ExtFieldCtx ext_of(std::uint64_t q) {
  const PrimePower pp = *as_prime_power(q);
  return ExtFieldCtx::make(FieldCtx::make(pp.p, pp.e));
}

void BM_ExtMul(benchmark::State& state) {
  const ExtFieldCtx ctx = ext_of(static_cast<std::uint64_t>(state.range(0)));
  const FieldCtx& ext = ctx.ext();
  Element x = ctx.primitive();
  for (auto _ : state) {
    x = ext.mul(x, ctx.alpha());
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_ExtMul)->Arg(7)->Arg(32)->Arg(27);

void BM_Trace(benchmark::State& state) {
  const ExtFieldCtx ctx = ext_of(static_cast<std::uint64_t>(state.range(0)));
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.trace(ctx.ext().element_at(i++ % ctx.ext().order())));
  }
}
BENCHMARK(BM_Trace)->Arg(7)->Arg(32)->Arg(27);

void BM_WeightDistribution(benchmark::State& state) {
  const Code code = Code::build(ext_of(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution_bruteforce(code));
}
BENCHMARK(BM_WeightDistribution)->Arg(8)->Arg(13)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_SolveSweep(benchmark::State& state) {
  const ExtFieldCtx ctx = ext_of(static_cast<std::uint64_t>(state.range(0)));
  const auto base = ctx.base().elements();
  for (auto _ : state) {
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < ctx.ext().order(); ++i) {
      const Element b = ctx.ext().element_at(i);
      for (const Element& c : base) total += solve(EquationInstance(ctx, b, c)).size();
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_SolveSweep)->Arg(8)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
