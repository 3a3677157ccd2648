#include <benchmark/benchmark.h>

#include <random>

#include "altschur/asymptotics.hpp"
#include "altschur/characters.hpp"
#include "altschur/field.hpp"
#include "altschur/partition.hpp"
#include "altschur/super.hpp"
#include "altschur/verify.hpp"

using namespace altschur;

namespace {

Perm random_perm(int n, uint64_t seed) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

uint64_t bench_prime() {
  std::mt19937_64 rng(424242);
  return pick_prime(rng);
}

}  // namespace

/* Building one sign-permutation operator on (C^{2|1})^{otimes n}. */
static void BM_PhiStar(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  GradedSpace g{2, 1};
  Perm sigma = random_perm(n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(phi_star(sigma, g, n));
  state.SetComplexityN(g.word_count(n));
}
BENCHMARK(BM_PhiStar)->DenseRange(4, 9)->Complexity(benchmark::oN);

/* Full character table of S_n by Murnaghan-Nakayama. */
static void BM_CharacterTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CharacterOracle oracle(n);
    benchmark::DoNotOptimize(oracle.dim(Partition({n})));
  }
}
BENCHMARK(BM_CharacterTable)->DenseRange(6, 12, 2);

/* Hook-length dimensions across all of Par(n). */
static void BM_FLambdaLevel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<Partition> level = enumerate_partitions(n);
  for (auto _ : state) {
    mpz_class s = 0;
    for (const Partition& p : level) s += f_lambda(p);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_FLambdaLevel)->DenseRange(10, 30, 10);

/* Centralizer of phi*(F S_n) as a modular commutant (d^2 unknowns). */
static void BM_ModularCommutant(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Fp::set_context(bench_prime());
  for (auto _ : state)
    benchmark::DoNotOptimize(centralizer_commutant<Fp>(GroupKind::S, 1, 1, n).dim());
}
BENCHMARK(BM_ModularCommutant)->DenseRange(3, 5);

/* The same space over exact rationals, for the mode gap. */
static void BM_ExactCommutant(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(centralizer_commutant<GaussRat>(GroupKind::S, 1, 1, n).dim());
}
BENCHMARK(BM_ExactCommutant)->DenseRange(3, 4);

/* Span dimension through the Gram matrix of weighted traces. */
static void BM_GramSpanDim(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<mpz_class> tnum = weighted_trace_table(enumerate_hooks(1, 1, n), 1, 1, n);
  uint64_t p = bench_prime();
  for (auto _ : state)
    benchmark::DoNotOptimize(gram_span_dim_modp(GroupKind::S, n, tnum, p));
}
BENCHMARK(BM_GramSpanDim)->DenseRange(4, 6);

/* Isotypic projector family as exact integer matrices. */
static void BM_Isotypic(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(isotypic(2, 1, n).num.size());
}
BENCHMARK(BM_Isotypic)->DenseRange(3, 5);

/* The branching DP behind the mass-ratio series. */
static void BM_MRatioSeries(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(m_ratio_series(2, 2, n, MRatioVariant::Total).points.size());
}
BENCHMARK(BM_MRatioSeries)->RangeMultiplier(2)->Range(25, 100);

BENCHMARK_MAIN();
