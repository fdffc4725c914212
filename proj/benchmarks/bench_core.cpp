#include <benchmark/benchmark.h>

#include "weyr/suite.hpp"

using namespace weyr;

namespace {

OperatorPencil scrambled(const std::string& blocks, std::uint64_t seed) {
  const CanonicalSpec spec = CanonicalSpec::parse(blocks);
  std::mt19937_64 rng(seed);
  const std::size_t n = spec.dimension();
  return apply_equivalence(from_canonical(spec), random_unimodular(n, 3, rng), random_unimodular(n, 3, rng));
}

const char* kSpecs[] = {"1@1/1,1@inf", "2@1/1,1@inf,1@0/1", "2@1/1,1@1/1,2@inf,1@0/1", "3@2/1,2@2/1,2@inf,1@0/1+1/1*i"};

void BM_DetPoly(benchmark::State& state) {
  const OperatorPencil p = scrambled(kSpecs[state.range(0)], 1);
  for (auto _ : state) benchmark::DoNotOptimize(pencil_det_poly(p.e(), p.a()));
  state.SetLabel("n=" + std::to_string(p.n()));
}
BENCHMARK(BM_DetPoly)->DenseRange(0, 3);

void BM_Roots(benchmark::State& state) {
  const OperatorPencil p = scrambled(kSpecs[state.range(0)], 2);
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_rational_roots(p.det_poly()));
}
BENCHMARK(BM_Roots)->DenseRange(0, 3);

void BM_PencilWeyr(benchmark::State& state) {
  const OperatorPencil p = scrambled(kSpecs[state.range(0)], 3);
  for (auto _ : state) benchmark::DoNotOptimize(pencil_weyr_table(p, ExtendedScalar::infinity()));
}
BENCHMARK(BM_PencilWeyr)->DenseRange(0, 3);

void BM_RelationWeyr(benchmark::State& state) {
  const LinearRelation l = kernel_representation(scrambled(kSpecs[state.range(0)], 4));
  for (auto _ : state) benchmark::DoNotOptimize(weyr_table(l, ExtendedScalar::infinity()));
}
BENCHMARK(BM_RelationWeyr)->DenseRange(0, 3);

void BM_PerturbationTrial(benchmark::State& state) {
  SuiteConfig c;
  c.seed = 5;
  std::uint64_t id = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_trial(c, id++, PerturbationKind::type_u));
}
BENCHMARK(BM_PerturbationTrial);

}  // namespace

BENCHMARK_MAIN();
