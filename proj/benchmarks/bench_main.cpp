#include "hopfz/catalog.hpp"
#include "hopfz/koszul.hpp"
#include "hopfz/linz.hpp"
#include "hopfz/primitivize.hpp"
#include "support/random.hpp"

#include <benchmark/benchmark.h>

using namespace hopfz;

namespace {

IntMatrix bench_matrix(std::size_t n) {
  hopfz::testing::Rng rng(hopfz::testing::kSeed);
  return hopfz::testing::random_matrix(rng, n, n + 2, -9, 9);
}

void BM_Hermite(benchmark::State& state) {
  const IntMatrix m = bench_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_Hermite)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Smith(benchmark::State& state) {
  const IntMatrix m = bench_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_Smith)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Decide(benchmark::State& state, const char* name, int degree) {
  const HopfPresentation p = catalog::preset(name, degree);
  for (auto _ : state) benchmark::DoNotOptimize(lie_hopf_decision(p));
}
BENCHMARK_CAPTURE(BM_Decide, cp2, "cp2", 4);
BENCHMARK_CAPTURE(BM_Decide, pentagon, "pentagon_manifold", 7);
BENCHMARK_CAPTURE(BM_Decide, binomial_12, "binomial", 12);

void BM_AxiomsBinomial(benchmark::State& state) {
  const HopfPresentation p = catalog::preset("binomial", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_hopf_axioms(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AxiomsBinomial)->Arg(8)->Arg(12);

void BM_PolygonCohomology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto dga = koszul::build_dga(koszul::SimplicialComplex::polygon(n));
  for (auto _ : state) {
    auto h = koszul::cohomology(dga, n + 2);
    benchmark::DoNotOptimize(koszul::cup_structure(h));
  }
}
BENCHMARK(BM_PolygonCohomology)->Arg(4)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
