#include <benchmark/benchmark.h>

#include <random>

#include "nearvec/closure.hpp"
#include "nearvec/ege.hpp"
#include "nearvec/linmaps.hpp"
#include "nearvec/nearfield.hpp"
#include "nearvec/seed.hpp"
#include "nearvec/subgroups.hpp"

namespace nearvec {
namespace {

Matrix random_matrix(std::mt19937_64& rng, const NearfieldPtr& nf, std::size_t k, std::size_t m) {
  std::vector<Vector> rows(k, Vector(m));
  for (auto& row : rows) {
    for (auto& e : row) e = Element{static_cast<std::uint32_t>(rng() % nf->order())};
  }
  return Matrix(nf, m, std::move(rows));
}

void BM_NearfieldMul(benchmark::State& state) {
  const auto nf = Nearfield::build(static_cast<std::int64_t>(state.range(0)), state.range(1));
  const std::uint32_t order = static_cast<std::uint32_t>(nf->order());
  std::uint32_t a = 1;
  std::uint32_t b = 2 % order;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nf->mul(Element{a}, Element{b}));
    a = (a + 7) % order;
    b = (b + 13) % order;
  }
}
BENCHMARK(BM_NearfieldMul)->Args({3, 2})->Args({5, 4})->Args({7, 6});

void BM_Ege(benchmark::State& state) {
  const auto nf = Nearfield::build(3, 2);
  const auto k = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<Matrix> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_matrix(rng, nf, k, k));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ege(inputs[i++ % inputs.size()]).dimension);
}
BENCHMARK(BM_Ege)->Arg(3)->Arg(8)->Arg(32);

void BM_GenClosure(benchmark::State& state) {
  const auto nf = Nearfield::build(3, 2);
  const auto m = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const Matrix v = random_matrix(rng, nf, 2, m);
  for (auto _ : state) benchmark::DoNotOptimize(gen_closure(make_set(nf, m, v.row_list())).size());
}
BENCHMARK(BM_GenClosure)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EnumerateMaps(benchmark::State& state) {
  const auto nf = Nearfield::build(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_maps_enumerated(nf, 2, MapKind::normal));
}
BENCHMARK(BM_EnumerateMaps)->Unit(benchmark::kMillisecond);

void BM_BuildSeed(benchmark::State& state) {
  const auto nf = Nearfield::build(3, 2);
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_seed(m, nf).k);
}
BENCHMARK(BM_BuildSeed)->Arg(24)->Arg(1000);

void BM_CountSubgroups(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_subgroups(m, m / 2, 9));
}
BENCHMARK(BM_CountSubgroups)->Arg(8)->Arg(16);

}  // namespace
}  // namespace nearvec

BENCHMARK_MAIN();
