#include <benchmark/benchmark.h>

#include "nlslab/born.hpp"
#include "nlslab/direct.hpp"

using namespace nlslab;

namespace {

constexpr double kPi = 3.14159265358979323846;

PotentialSpec example_potential(double k, double zhat = 1e-2) {
  return PotentialSpec::fourier(
      2.0 * kPi, 1.0, zhat * k * k,
      {{-6, {-0.15, 0.0}}, {-2, {0.50, 0.0}}, {4, {0.35, 0.0}}});
}

void BM_direct_solve(benchmark::State& state) {
  const double k = 4.0;
  const auto pot = example_potential(k);
  const auto nl = NonlinearitySpec::kerr(1e-3 * k * k);
  SolveOptions opt;
  opt.grid_size = static_cast<int>(state.range(0));
  opt.tol = 1e-10;
  for (auto _ : state) {
    auto r = direct_scattering(pot, nl, k, {1.0, 0.0}, {1.0, 0.0}, opt);
    benchmark::DoNotOptimize(r.jost.Rr);
  }
}
BENCHMARK(BM_direct_solve)->Arg(1024)->Arg(4096);

void BM_born2_general(benchmark::State& state) {
  const double k = 2.3;
  const auto pot = example_potential(k);
  const auto nl = NonlinearitySpec::kerr(1e-3 * k * k);
  for (auto _ : state) {
    auto a = born2_general(pot, nl, {1.0, 0.0}, {1.0, 0.0}, k,
                           static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(a.Rr);
  }
}
BENCHMARK(BM_born2_general)->Arg(1024)->Arg(4096);

void BM_born2_resonance(benchmark::State& state) {
  const double k = 4.0;
  const auto in = resonance_inputs(example_potential(k),
                                   NonlinearitySpec::kerr(1e-3 * k * k),
                                   {1.0, 0.0}, {1.0, 0.0}, 8);
  for (auto _ : state) {
    auto a = born2_resonance(in);
    benchmark::DoNotOptimize(a.Rl);
  }
}
BENCHMARK(BM_born2_resonance);

void BM_born1_fourier(benchmark::State& state) {
  const double k = 1.3;
  const auto in = perturbative_inputs(example_potential(k),
                                      NonlinearitySpec::kerr(1e-3 * k * k),
                                      {1.0, 0.0}, {1.0, 0.0}, k);
  for (auto _ : state) {
    auto a = born1_fourier(in);
    benchmark::DoNotOptimize(a.Tr);
  }
}
BENCHMARK(BM_born1_fourier);

}  // namespace

BENCHMARK_MAIN();
