#include <benchmark/benchmark.h>

#include <variant>

#include "adlie/catalog.hpp"
#include "adlie/construct.hpp"
#include "adlie/geometry.hpp"
#include "adlie/jmaps.hpp"
#include "adlie/liealg.hpp"
#include "adlie/rho.hpp"

using namespace adlie;

namespace {

RhoMap generated(std::size_t n) { return std::get<RhoMap>(generate(n)); }

void BM_Generate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate(n));
}
BENCHMARK(BM_Generate)->Arg(5)->Arg(12)->Arg(24);

void BM_ValidateRho(benchmark::State& state) {
  const RhoMap rho = generated(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_rho(rho));
}
BENCHMARK(BM_ValidateRho)->Arg(5)->Arg(12)->Arg(24);

void BM_ModifiedCotangentJacobi(benchmark::State& state) {
  const MetricLieAlgebra m = modified_cotangent(generated(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(validate(m.algebra));
}
BENCHMARK(BM_ModifiedCotangentJacobi)->Arg(5)->Arg(8)->Arg(12);

void BM_AdInvariance(benchmark::State& state) {
  const MetricLieAlgebra m = modified_cotangent(generated(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_ad_invariant(m));
}
BENCHMARK(BM_AdInvariance)->Arg(5)->Arg(8)->Arg(12);

void BM_NormalForm(benchmark::State& state) {
  const MetricLieAlgebra m =
      add_central_factor(modified_cotangent(generated(static_cast<std::size_t>(state.range(0)))), 2, Mat::identity(2));
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(m));
}
BENCHMARK(BM_NormalForm)->Arg(3)->Arg(5)->Arg(7);

void BM_DecideAdmits(benchmark::State& state) {
  const LieAlgebra l = modified_cotangent(generated(static_cast<std::size_t>(state.range(0)))).algebra;
  const BilinearSpace inner = BilinearSpace::identity(l.dim());
  for (auto _ : state) benchmark::DoNotOptimize(decide_admits_ad_invariant(l, inner));
}
BENCHMARK(BM_DecideAdmits)->Arg(3)->Arg(5)->Arg(6);

void BM_Curvature(benchmark::State& state) {
  const MetricLieAlgebra m = modified_cotangent(generated(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(curvature(m));
}
BENCHMARK(BM_Curvature)->Arg(3)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
