#include <benchmark/benchmark.h>

#include "hzeta/casimir.hpp"
#include "hzeta/closed_form_integrals.hpp"
#include "hzeta/quadrature.hpp"
#include "hzeta/special_functions.hpp"

using namespace hzeta;

static void BM_hurwitz_zeta(benchmark::State& state) {
  const Complex a(2.5, 1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hurwitz_zeta(a, 0.37).value);
  }
}
BENCHMARK(BM_hurwitz_zeta);

static void BM_riemann_zeta_derivative(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(riemann_zeta_derivative(Complex(3.2)).value);
  }
}
BENCHMARK(BM_riemann_zeta_derivative);

static void BM_integral_I(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(integral_I(2.4, 3.6).value);
  }
}
BENCHMARK(BM_integral_I);

static void BM_integral_J_strip(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(integral_J(0.3, 0.7).value);
  }
}
BENCHMARK(BM_integral_J_strip);

static void BM_tanh_sinh_II(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad_eval({IntegrandKind::II, Complex(3.0), Complex(3.0)}, 1e-10).value);
  }
}
BENCHMARK(BM_tanh_sinh_II);

static void BM_c1_closed(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(c1_closed(0.3).value);
  }
}
BENCHMARK(BM_c1_closed);

static void BM_c1_assembled(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(c1_assembled(0.3).value);
  }
}
BENCHMARK(BM_c1_assembled);

BENCHMARK_MAIN();
