/*
   Copyright 2026 The z4nu Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include <benchmark/benchmark.h>

#include <random>

#include "z4nu/analysis.hpp"
#include "z4nu/oracle.hpp"
#include "z4nu/poly_text.hpp"

namespace {

using namespace z4nu;

QuotientContext context(Theta t, const char* unit, std::size_t n) {
  return QuotientContext::make(t, parse_element(unit, t), n);
}

GeneratorSet random_set(const QuotientContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RPoly> g;
  for (int k = 0; k < 3; ++k) {
    std::vector<RingElement> c;
    for (std::size_t i = 0; i < ctx.n; ++i)
      c.push_back({static_cast<std::uint8_t>(rng() & 3), static_cast<std::uint8_t>((rng() >> 2) & 3), ctx.theta});
    g.emplace_back(ctx.theta, c);
  }
  return GeneratorSet(ctx, g);
}

void BM_QuotientMul(benchmark::State& state) {
  const auto ctx = context(Theta::One, "3v", static_cast<std::size_t>(state.range(0)));
  const auto gs = random_set(ctx, 1);
  for (auto _ : state) benchmark::DoNotOptimize(quotient_mul(ctx, gs.gens[0], gs.gens[1]));
}
BENCHMARK(BM_QuotientMul)->Arg(8)->Arg(32)->Arg(128);

void BM_CanonicalizeAlpha(benchmark::State& state) {
  const auto ctx = context(Theta::Zero, "1+2v", static_cast<std::size_t>(state.range(0)));
  const auto gs = random_set(ctx, 2);
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize_alpha(gs));
}
BENCHMARK(BM_CanonicalizeAlpha)->Arg(8)->Arg(16)->Arg(32);

void BM_CanonicalizeBeta(benchmark::State& state) {
  const auto ctx = context(Theta::Zero, "3", static_cast<std::size_t>(state.range(0)));
  const auto gs = random_set(ctx, 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize_beta(gs));
}
BENCHMARK(BM_CanonicalizeBeta)->Arg(8)->Arg(16)->Arg(32);

void BM_Analyze(benchmark::State& state) {
  const auto ctx = context(Theta::Nu, "1+2v", static_cast<std::size_t>(state.range(0)));
  const auto gs = random_set(ctx, 4);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(gs));
}
BENCHMARK(BM_Analyze)->Arg(8)->Arg(16);

void BM_EnumerateIdeal(benchmark::State& state) {
  const auto ctx = context(Theta::Zero, "1+v", static_cast<std::size_t>(state.range(0)));
  const auto gs = random_set(ctx, 5);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideal(gs).size());
}
BENCHMARK(BM_EnumerateIdeal)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_EnumerateAllIdeals(benchmark::State& state) {
  const auto ctx = context(Theta::Zero, "3", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideal_generators(ctx).size());
}
BENCHMARK(BM_EnumerateAllIdeals)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
