#include <benchmark/benchmark.h>

#include <random>

#include "kgg/constructions.hpp"
#include "kgg/group.hpp"
#include "kgg/homology.hpp"
#include "kgg/semigroup.hpp"
#include "kgg/structure.hpp"

using namespace kgg;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_refine(benchmark::State& state) {
  const auto g = ckr(2, 2);
  std::mt19937_64 rng(1);
  const auto e = random_element(g, rng, 2);
  const GroupOptions opts{20, exec_of(state)};
  for (auto _ : state) benchmark::DoNotOptimize(refine_to_degree(g, e, Degree{3, 3}, opts));
  label(state);
}

void BM_multiply(benchmark::State& state) {
  const auto g = ckr(2, 1);
  std::mt19937_64 rng(2);
  const auto a = random_element(g, rng, 3);
  const auto b = random_element(g, rng, 3);
  const GroupOptions opts{20, exec_of(state)};
  for (auto _ : state) benchmark::DoNotOptimize(multiply(g, a, b, opts));
  label(state);
}

void BM_table_product(benchmark::State& state) {
  const auto g = ckr(2, 2);
  std::mt19937_64 rng(3);
  const auto a = refine_to_degree(g, random_element(g, rng, 1), Degree{2, 1});
  const auto b = refine_to_degree(g, random_element(g, rng, 1), Degree{2, 1});
  const auto s = MorphismTable::from_pairs(g, {a.pairs().begin(), a.pairs().end()});
  const auto t = MorphismTable::from_pairs(g, {b.pairs().begin(), b.pairs().end()});
  for (auto _ : state) benchmark::DoNotOptimize(table_product(g, s, t, exec_of(state)));
  label(state);
}

void BM_aperiodicity(benchmark::State& state) {
  const auto g = ckr(3, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(aperiodicity_scan(g, Degree{1, 1, 1}, Degree{2, 2, 2}, exec_of(state)));
  }
  label(state);
}

void BM_homology(benchmark::State& state) {
  const auto cx = evans_complex(ckr(3, 4));
  for (auto _ : state) benchmark::DoNotOptimize(homology(cx, exec_of(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_refine)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_table_product)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_aperiodicity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_homology)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
