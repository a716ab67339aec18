#include <benchmark/benchmark.h>

#include <random>

#include "disq/exact_poly.hpp"
#include "disq/quadrature.hpp"
#include "disq/real_roots.hpp"
#include "disq/sweep.hpp"
#include "disq/symbolic_disc.hpp"

namespace {

disq::Polynomial random_int_poly(std::mt19937_64& rng, int degree, int range) {
  std::vector<disq::Rational> c(static_cast<size_t>(degree) + 1);
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  };
  c[0] = draw(1, range);
  for (int i = 1; i <= degree; ++i) c[static_cast<size_t>(i)] = draw(-range, range);
  return disq::Polynomial(std::move(c));
}

void BM_discriminant(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int degree = static_cast<int>(state.range(0));
  disq::Polynomial f = random_int_poly(rng, degree, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(disq::discriminant(f));
  }
}
BENCHMARK(BM_discriminant)->Arg(3)->Arg(5)->Arg(8);

void BM_delta_squared(benchmark::State& state) {
  std::mt19937_64 rng(2);
  disq::Polynomial f = random_int_poly(rng, static_cast<int>(state.range(0)), 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(disq::delta_squared(f));
  }
}
BENCHMARK(BM_delta_squared)->Arg(3)->Arg(6);

void BM_sym_discriminant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(disq::sym_discriminant(n));
  }
}
BENCHMARK(BM_sym_discriminant)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_isolate_quintic(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<disq::Polynomial> polys;
  for (int i = 0; i < 64; ++i) polys.push_back(random_int_poly(rng, 5, 9));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(disq::isolate(polys[i++ % polys.size()]));
  }
}
BENCHMARK(BM_isolate_quintic);

void BM_integrate_cubic(benchmark::State& state) {
  disq::Polynomial f = disq::Polynomial::from_ints({1, 0, 1, 0});
  const double tol = 1e-10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(disq::integrate_power(f, 3, tol));
  }
  state.SetLabel("x^3+x, tol 1e-10");
}
BENCHMARK(BM_integrate_cubic)->Unit(benchmark::kMicrosecond);

void BM_cubic_sweep(benchmark::State& state) {
  disq::SweepConfig cfg;
  cfg.count = static_cast<int>(state.range(0));
  cfg.seed = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(disq::run_cubic_sweep(cfg));
  }
}
BENCHMARK(BM_cubic_sweep)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
