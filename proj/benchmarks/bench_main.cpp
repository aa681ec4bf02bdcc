#include <benchmark/benchmark.h>

#include <random>

#include "goswf/basis.hpp"
#include "goswf/eigencore.hpp"
#include "goswf/laplace_operator.hpp"
#include "goswf/nystrom.hpp"
#include "goswf/quadrature.hpp"

namespace {

void BM_GaussJacobi(benchmark::State& state) {
  const goswf::WeightParams w(2.0, 3.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(goswf::gauss_jacobi(w, n));
}
BENCHMARK(BM_GaussJacobi)->Arg(20)->Arg(60)->Arg(200);

void BM_SymEig(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  goswf::SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m.set(i, j, u(rng));
  }
  for (auto _ : state) benchmark::DoNotOptimize(goswf::sym_eig(m));
}
BENCHMARK(BM_SymEig)->Arg(41)->Arg(128);

void BM_Method1(benchmark::State& state) {
  const goswf::OperatorParams op(goswf::WeightParams(6.0, 7.0), 6.0);
  for (auto _ : state) benchmark::DoNotOptimize(goswf::solve_method1(op, 21));
}
BENCHMARK(BM_Method1)->Unit(benchmark::kMillisecond);

void BM_Method2(benchmark::State& state) {
  const goswf::OperatorParams op(goswf::WeightParams(6.0, 7.0), 6.0);
  for (auto _ : state) benchmark::DoNotOptimize(goswf::solve_method2_nystrom(op));
}
BENCHMARK(BM_Method2)->Unit(benchmark::kMillisecond);

void BM_Kernel(benchmark::State& state) {
  const goswf::LaplaceOperator op(goswf::OperatorParams(goswf::WeightParams(2.0, 3.0), 1.5));
  const auto method = state.range(0) == 0 ? goswf::KernelMethod::direct : goswf::KernelMethod::whittaker;
  for (auto _ : state) benchmark::DoNotOptimize(op.kernel(0.4, 0.3, method));
}
BENCHMARK(BM_Kernel)->Arg(0)->Arg(1);

}  // namespace
BENCHMARK_MAIN();
