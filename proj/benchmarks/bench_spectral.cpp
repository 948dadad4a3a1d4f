#include <benchmark/benchmark.h>

#include "cjacobi/constant_diagonal.hpp"
#include "cjacobi/direct.hpp"
#include "cjacobi/inverse.hpp"
#include "cjacobi/motzkin.hpp"
#include "cjacobi/qpolys.hpp"
#include "cjacobi/random.hpp"

namespace {

using namespace cjacobi;

void bm_phase_function(benchmark::State& state) {
  const ComplexJacobi jac = random_jacobi(1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phase_function(jac));
  }
}
BENCHMARK(bm_phase_function)->Arg(8)->Arg(16)->Arg(32);

void bm_reconstruct(benchmark::State& state) {
  const ComplexJacobi jac = random_jacobi(2, static_cast<int>(state.range(0)));
  const SpectralData data = phase_function(jac);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct(data));
  }
}
BENCHMARK(bm_reconstruct)->Arg(4)->Arg(8)->Arg(12);

void bm_moment_sequence(benchmark::State& state) {
  const ComplexJacobi jac = random_jacobi(3, 24);
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment_sequence(jac, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(bm_moment_sequence)->Arg(8)->Arg(16);

void bm_path_moment(benchmark::State& state) {
  const BlockJacobi blocks = block_embed(random_jacobi(4, 8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(path_moment(blocks, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(bm_path_moment)->Arg(6)->Arg(10)->Arg(13);

void bm_closed_form_moments(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_moments(Complex(1.0, 1.0), static_cast<int>(state.range(0))));
  }
}
BENCHMARK(bm_closed_form_moments)->Arg(4)->Arg(10);

void bm_orthogonality_gram(benchmark::State& state) {
  const ComplexJacobi jac = random_jacobi(5, 10);
  const SpectralData data = phase_function(jac);
  const auto qs = q_polynomials(jac, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orthogonality_gram(qs, data, GramForm::vector_form));
  }
}
BENCHMARK(bm_orthogonality_gram);

}  // namespace

BENCHMARK_MAIN();
