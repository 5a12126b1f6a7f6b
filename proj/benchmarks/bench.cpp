#include <benchmark/benchmark.h>

#include "qcong/congruence.hpp"
#include "qcong/hecke.hpp"
#include "qcong/oracle.hpp"

using namespace qcong;

static void BM_SeriesMulDense(benchmark::State& state) {
    const long long N = state.range(0);
    ModRing R(161051);
    RSeries a(R, 0, N), b(R, 0, N);
    std::uint64_t x = 88172645463325252ULL;
    auto next = [&x] { x ^= x << 13; x ^= x >> 7; x ^= x << 17; return x; };
    for (long long n = 0; n < N; ++n) {
        a.set(n, next() % 161051);
        b.set(n, next() % 161051);
    }
    for (auto _ : state) benchmark::DoNotOptimize(series_mul(a, b));
}
BENCHMARK(BM_SeriesMulDense)->Arg(512)->Arg(2048);

static void BM_PartitionSeries(benchmark::State& state) {
    const long long N = state.range(0);
    Modulus mk(11, 2);
    for (auto _ : state) benchmark::DoNotOptimize(partition_r_series(7, N, mk));
}
BENCHMARK(BM_PartitionSeries)->Arg(10000)->Arg(100000);

static void BM_EchelonBasis(benchmark::State& state) {
    Modulus mk(5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(echelon_basis_M(state.range(0), 400, mk));
}
BENCHMARK(BM_EchelonBasis)->Arg(48)->Arg(114);

static void BM_SolvePhi(benchmark::State& state) {
    auto p = derive_params(7, 1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(solve_phi(p, 2000));
}
BENCHMARK(BM_SolvePhi);

static void BM_HeckeSystem(benchmark::State& state) {
    auto p = derive_params(5, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(make_hecke_system(p, 13));
}
BENCHMARK(BM_HeckeSystem);

static void BM_OracleResidue(benchmark::State& state) {
    const long long N = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::residue_p_r(3, N, 7));
}
BENCHMARK(BM_OracleResidue)->Arg(100000);

BENCHMARK_MAIN();
