#include <benchmark/benchmark.h>

#include "twistgrp/digraph.hpp"
#include "twistgrp/gf.hpp"
#include "twistgrp/suzuki.hpp"

using namespace twistgrp;

static void BM_FieldMul(benchmark::State& state) {
  const FieldSpec& f = field_make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  FieldSpec::Code a = 1, b = f.order() - 1;
  for (auto _ : state) {
    a = f.mul(a, b) | 1;
    b = f.add(b, a);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Args({2, 3})->Args({2, 13})->Args({3, 3})->Args({3, 7});

static void BM_MatrixMul4(benchmark::State& state) {
  const SuzukiContext ctx = SuzukiContext::build(8, 0);
  const auto gens = ctx.generators();
  Matrix x = gens[0];
  for (auto _ : state) {
    x = x * gens[2];
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_MatrixMul4);

static void BM_Sz8Closure(benchmark::State& state) {
  for (auto _ : state) {
    const SuzukiContext ctx = SuzukiContext::build(8);
    benchmark::DoNotOptimize(ctx.group().order());
  }
}
BENCHMARK(BM_Sz8Closure)->Unit(benchmark::kMillisecond);

static void BM_CosetLabels(benchmark::State& state) {
  const SuzukiContext ctx = SuzukiContext::build(8);
  const auto ing = suzuki_digraph_ingredients(ctx);
  const auto& elems = ctx.group().elements();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(coset_label(elems[i], ing.h));
    i = (i + 1) % elems.size();
  }
}
BENCHMARK(BM_CosetLabels);

static void BM_Sz8Digraph(benchmark::State& state) {
  const SuzukiContext ctx = SuzukiContext::build(8);
  const auto ing = suzuki_digraph_ingredients(ctx);
  const auto h = std::make_shared<const EnumeratedGroup>(ing.h);
  for (auto _ : state) benchmark::DoNotOptimize(build_coset_digraph(ctx.group_ptr(), h, ing.g).arc_count());
}
BENCHMARK(BM_Sz8Digraph)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
