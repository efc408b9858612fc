/*
   Copyright 2026 The dickson authors

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

#include "dickson/dickson.hpp"
#include "dickson/numtheory.hpp"
#include "dickson/periodicity.hpp"
#include "dickson/recognition.hpp"

using namespace dickson;

static void BM_FieldMul(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const auto els = f.elements();
  std::size_t i = 0;
  Felt acc = f.one();
  for (auto _ : state) {
    acc = f.mul(acc, els[i++ % els.size()]);
    if (acc.code == 0) acc = f.one();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(7)->Arg(16)->Arg(81)->Arg(256);

static void BM_DicksonReduced(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const std::uint64_t n = static_cast<std::uint64_t>(f.q()) * f.q() - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dickson_reduced(DicksonId{n, f.one()}, f));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DicksonReduced)->Arg(5)->Arg(9)->Arg(16)->Arg(27)->Complexity();

static void BM_DicksonStride2(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const std::uint64_t n = static_cast<std::uint64_t>(f.q()) * f.q() - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dickson_stride2(DicksonId{n, f.one()}, f));
  }
}
BENCHMARK(BM_DicksonStride2)->Arg(5)->Arg(9)->Arg(27);

static void BM_BinomLucas(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> d(0, 1u << 16);
  for (auto _ : state) {
    std::uint64_t m = d(rng), n = d(rng);
    if (n > m) std::swap(m, n);
    benchmark::DoNotOptimize(binom_mod_p(m, n, 3, 2));
  }
}
BENCHMARK(BM_BinomLucas);

static void BM_EmpiricalPeriod(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const Felt a = f.generator();
  for (auto _ : state) benchmark::DoNotOptimize(empirical_period(f, a));
}
BENCHMARK(BM_EmpiricalPeriod)->Arg(7)->Arg(13)->Arg(16);

// Both recognizers on the same member of the family.
static void BM_RecognizeBrute(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const RPoly g = dickson_reduced(DicksonId{f.q() + 2, f.from_int(3)}, f);
  for (auto _ : state) benchmark::DoNotOptimize(recognize_brute(g));
}
BENCHMARK(BM_RecognizeBrute)->Arg(7)->Arg(11)->Arg(13);

static void BM_RecognizeGuess(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const GuessRecognizer guess(f);
  const RPoly g = dickson_reduced(DicksonId{f.q() + 2, f.from_int(3)}, f);
  for (auto _ : state) benchmark::DoNotOptimize(guess.recognize(g));
}
BENCHMARK(BM_RecognizeGuess)->Arg(7)->Arg(11)->Arg(13);

BENCHMARK_MAIN();
