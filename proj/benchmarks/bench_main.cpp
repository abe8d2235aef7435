// Microbenchmarks for the hot paths: fitting, both statistics, the full
// partition, the design-matrix factorisation, and the chi-square tail.
#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <random>

#include "sqsym/sqsym.hpp"

namespace {

sqsym::SquareTable random_table(int r, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> cell(1.0, 200.0);
  Eigen::MatrixXd counts(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) counts(i, j) = std::floor(cell(rng));
  return sqsym::SquareTable::from_counts(counts);
}

void fit_model(benchmark::State& state, sqsym::Model model) {
  const auto table = random_table(static_cast<int>(state.range(0)), 99);
  for (auto _ : state) {
    auto fit = sqsym::fit(model, table);
    benchmark::DoNotOptimize(fit.fitted.data());
  }
}

void bench_fit_s(benchmark::State& s) { fit_model(s, sqsym::Model::S); }
void bench_fit_cs(benchmark::State& s) { fit_model(s, sqsym::Model::CS); }
void bench_fit_dps(benchmark::State& s) { fit_model(s, sqsym::Model::DPS); }
void bench_fit_dgs(benchmark::State& s) { fit_model(s, sqsym::Model::DGS); }
void bench_fit_gs(benchmark::State& s) { fit_model(s, sqsym::Model::GS); }

void bench_g2(benchmark::State& state) {
  const auto table = random_table(static_cast<int>(state.range(0)), 101);
  const auto fit = sqsym::fit_s(table);
  for (auto _ : state) {
    auto stat = sqsym::g2(table, fit);
    benchmark::DoNotOptimize(stat.value);
  }
}

void bench_wald(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto table = random_table(r, 103);
  const auto design = sqsym::build_design_matrices(r);
  for (auto _ : state) {
    auto stat = sqsym::wald(table, sqsym::Model::S, design);
    benchmark::DoNotOptimize(stat.value);
  }
}

void bench_partition_g2(benchmark::State& state) {
  const auto table = random_table(static_cast<int>(state.range(0)), 107);
  for (auto _ : state) {
    auto p = sqsym::partition(table, sqsym::StatKind::G2);
    benchmark::DoNotOptimize(p.residual);
  }
}

void bench_partition_wald(benchmark::State& state) {
  const auto table = random_table(static_cast<int>(state.range(0)), 109);
  for (auto _ : state) {
    auto p = sqsym::partition(table, sqsym::StatKind::Wald);
    benchmark::DoNotOptimize(p.residual);
  }
}

void bench_design_matrices(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto design = sqsym::build_design_matrices(r);
    benchmark::DoNotOptimize(design.null_basis.data());
  }
}

void bench_chi_square_sf(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    x += 1e-9;
    benchmark::DoNotOptimize(sqsym::chi_square_sf(x, 5));
  }
}

}  // namespace

BENCHMARK(bench_fit_s)->DenseRange(3, 8);
BENCHMARK(bench_fit_cs)->DenseRange(3, 8);
BENCHMARK(bench_fit_dps)->DenseRange(3, 8);
BENCHMARK(bench_fit_dgs)->DenseRange(3, 8);
BENCHMARK(bench_fit_gs)->DenseRange(3, 8);
BENCHMARK(bench_g2)->DenseRange(3, 8);
BENCHMARK(bench_wald)->DenseRange(3, 8);
BENCHMARK(bench_partition_g2)->DenseRange(3, 8);
BENCHMARK(bench_partition_wald)->DenseRange(3, 8);
BENCHMARK(bench_design_matrices)->DenseRange(3, 8);
BENCHMARK(bench_chi_square_sf);

BENCHMARK_MAIN();
