// Serial reference kernels against the OpenMP path on the same inputs.
#include <benchmark/benchmark.h>

#include "carleman/domain.hpp"
#include "carleman/parallel.hpp"
#include "carleman/random.hpp"
#include "carleman/verify.hpp"

using namespace carleman;

namespace {

ExecutionPolicy policy_of(const benchmark::State& state) {
  return state.range(0) == 0 ? ExecutionPolicy::serial : ExecutionPolicy::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_RieszAtNodes(benchmark::State& state) {
  const QuadratureRule rule = interior_quadrature(Domain::unit_ball(4), static_cast<int>(state.range(1)));
  SplitMix64 rng(1);
  std::vector<std::vector<double>> sets(4, std::vector<double>(rule.size()));
  for (auto& s : sets) {
    for (double& v : s) v = rng.uniform();
  }
  for (auto _ : state) benchmark::DoNotOptimize(riesz_at_nodes(rule, 2.0, sets, policy_of(state)));
  state.counters["nodes"] = static_cast<double>(rule.size());
  label(state);
}

void BM_BoundaryPotential(benchmark::State& state) {
  const Domain d = Domain::unit_ball(3);
  const QuadratureRule bd = boundary_quadrature(d, static_cast<int>(state.range(1)));
  const QuadratureRule in = interior_quadrature(d, static_cast<int>(state.range(1)));
  std::vector<double> f(bd.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = 1.0 + bd.node(i)[0];
  for (auto _ : state) benchmark::DoNotOptimize(boundary_potential_at_nodes(bd, f, in, policy_of(state)));
  label(state);
}

void BM_GreenBounds(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_green_bounds(4, std::nullopt, static_cast<int>(state.range(1)),
                                                 kDefaultSeed, policy_of(state)));
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_RieszAtNodes)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundaryPotential)->ArgsProduct({{0, 1}, {4, 5}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GreenBounds)->ArgsProduct({{0, 1}, {10000}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
