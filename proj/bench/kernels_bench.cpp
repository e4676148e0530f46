#include <benchmark/benchmark.h>

#include "nilprim/construct.hpp"
#include "nilprim/kernels.hpp"
#include "nilprim/singer.hpp"

using namespace nilprim;

namespace {

// irreducible group, so the sweep visits every line
const MatrixGroup& sweep_group() {
  static const MatrixGroup G = q8_times_c(3, make_field(7, 1), 19);
  return G;
}

const MatrixGroup& conj_group() {
  static const MatrixGroup G = nilprim_gl2(make_field(31, 1), Sylow2Kind::semidihedral, 0, 15);
  return G;
}

void sweep_serial(benchmark::State& st) {
  const auto& G = sweep_group();
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::sweep_serial(G.generators(), G.field_ptr(), G.degree(), SweepMode::lines));
}

void sweep_parallel(benchmark::State& st) {
  const auto& G = sweep_group();
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::sweep_parallel(G.generators(), G.field_ptr(), G.degree(), SweepMode::lines));
}

void submodules_serial(benchmark::State& st) {
  const auto F = make_field(3, 1);
  const std::vector<Matrix> gens{pow(singer_cycle(6, F), 56)};
  for (auto _ : st) benchmark::DoNotOptimize(kernels::submodules_of_dim_serial(gens, F, 6, 3));
}

void submodules_parallel(benchmark::State& st) {
  const auto F = make_field(3, 1);
  const std::vector<Matrix> gens{pow(singer_cycle(6, F), 56)};
  for (auto _ : st) benchmark::DoNotOptimize(kernels::submodules_of_dim_parallel(gens, F, 6, 3));
}

void conjugacy_serial(benchmark::State& st) {
  const auto& G = conj_group();
  const MatrixGroup H = G.conjugated_by(Matrix::from_ints(G.field_ptr(), {{1, 2}, {3, 5}}));
  const auto p = kernels::prepare_conjugacy(G, H, 1'000'000);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::conjugacy_serial(p, 100'000'000));
}

void conjugacy_parallel(benchmark::State& st) {
  const auto& G = conj_group();
  const MatrixGroup H = G.conjugated_by(Matrix::from_ints(G.field_ptr(), {{1, 2}, {3, 5}}));
  const auto p = kernels::prepare_conjugacy(G, H, 1'000'000);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::conjugacy_parallel(p, 100'000'000));
}

}  // namespace

BENCHMARK(sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(sweep_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(submodules_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(submodules_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(conjugacy_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(conjugacy_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
