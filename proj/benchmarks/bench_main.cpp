#include <benchmark/benchmark.h>

#include <random>

#include "hecke/counting.hpp"
#include "hecke/crystal.hpp"
#include "hecke/cyclotomic.hpp"

namespace {

void BM_LatticeCase1(benchmark::State& state) {
  const auto cfg = hecke::ParamConfig::case1(3, 2, 3, {0, 1});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = hecke::generate_lattice(cfg, hecke::NodeOrder::Kleshchev, n);
    benchmark::DoNotOptimize(g.levels.back().size());
  }
}
BENCHMARK(BM_LatticeCase1)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_LatticeFlotw(benchmark::State& state) {
  const auto cfg = hecke::ParamConfig::case2(1, 3, 2, 2, {0, 1});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = hecke::generate_lattice(cfg, hecke::NodeOrder::Flotw, n);
    benchmark::DoNotOptimize(g.levels.back().size());
  }
}
BENCHMARK(BM_LatticeFlotw)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_NTildeBrute(benchmark::State& state) {
  const auto cfg = hecke::ParamConfig::case2(2, 2, 1, 2, {0, 0});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hecke::n_tilde(cfg, n, 4, hecke::CountMethod::Brute));
}
BENCHMARK(BM_NTildeBrute)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_NTildeFormula(benchmark::State& state) {
  const auto cfg = hecke::ParamConfig::case2(2, 2, 1, 2, {0, 0});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hecke::n_tilde(cfg, n, 4, hecke::CountMethod::Formula));
}
BENCHMARK(BM_NTildeFormula)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_DetExact(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int s = 2;
  std::mt19937_64 rng(1);
  const auto blocks = hecke::build_blocks(hecke::random_nonsingular_integer_matrix(r, s, rng), r, s);
  for (auto _ : state) benchmark::DoNotOptimize(hecke::det_exact(blocks.m).is_zero());
  state.SetLabel("size " + std::to_string(blocks.m.rows()));
}
BENCHMARK(BM_DetExact)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
