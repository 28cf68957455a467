#include <benchmark/benchmark.h>

#include "hcyl/field.hpp"
#include "hcyl/homogeneous_series.hpp"
#include "hcyl/mode_bvp.hpp"
#include "hcyl/oracle.hpp"
#include "hcyl/pipeline.hpp"

namespace {

using namespace hcyl;

const CylinderGeometry geom{0.1365, 0.4, 3.0, 0.2125};
const ElasticMaterial material = ElasticMaterial::from_engineering(35000e6, 0.2);
const AxialLoad load = AxialLoad::from_total_force(1900e3, geom);

void BM_BuildBasisDouble(benchmark::State& state) {
  const auto sc = scaled_coefficients(material.lambda, material.mu);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_basis<double>(1, order, sc));
}
BENCHMARK(BM_BuildBasisDouble)->Arg(41)->Arg(123)->Arg(367);

void BM_BuildBasisExtended(benchmark::State& state) {
  const auto sc = scaled_coefficients_as<Extended>(material.lambda, material.mu);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_basis<Extended>(1, order, sc));
}
BENCHMARK(BM_BuildBasisExtended)->Arg(41)->Arg(123)->Arg(367);

void BM_EvalBasis(benchmark::State& state) {
  const auto sc = scaled_coefficients(material.lambda, material.mu);
  const auto b = build_basis<double>(3, 123, sc);
  double t = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(b.eval(t));
    t = t < 4.0 ? t + 0.01 : 0.5;
  }
}
BENCHMARK(BM_EvalBasis);

void BM_SolveMode(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  ModeOptions o;
  o.extended_precision = state.range(2) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_mode(k, material, geom, load, order, o));
}
BENCHMARK(BM_SolveMode)->Args({1, 11, 0})->Args({1, 11, 1})->Args({59, 367, 1})->Unit(benchmark::kMillisecond);

void BM_GridSample(benchmark::State& state) {
  PipelineOptions o;
  o.threads = 1;
  const auto solved = solve_modes(5, material, geom, load, o);
  for (auto _ : state) benchmark::DoNotOptimize(grid_sample(solved.set, {50, 150, {}}, 1));
}
BENCHMARK(BM_GridSample)->Unit(benchmark::kMillisecond);

void BM_CollocationOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(collocation_solve_mode(1, material, geom, load, n));
  }
}
BENCHMARK(BM_CollocationOracle)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
