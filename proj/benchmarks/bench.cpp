#include <weakmonads/entwine.hpp>
#include <weakmonads/lifting.hpp>
#include <weakmonads/linalg.hpp>
#include <weakmonads/premonad_bridge.hpp>
#include <weakmonads/sample.hpp>

#include <benchmark/benchmark.h>

using namespace weakmonads;

namespace {

Field field_for(std::int64_t which) { return which == 0 ? Field::rationals() : Field::prime(7); }

void BM_Compose(benchmark::State& state) {
    Field f = field_for(state.range(1));
    std::size_t n = state.range(0);
    Rng rng(1);
    LinMap a = random_matrix(f, n, n, rng), b = random_matrix(f, n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose)->ArgsProduct({{4, 16, 64}, {0, 1}});

void BM_Kron(benchmark::State& state) {
    Field f = field_for(state.range(1));
    std::size_t n = state.range(0);
    Rng rng(2);
    LinMap a = random_matrix(f, n, n, rng), b = random_matrix(f, n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron)->ArgsProduct({{2, 4, 8}, {0, 1}});

void BM_Rref(benchmark::State& state) {
    Field f = field_for(state.range(1));
    std::size_t n = state.range(0);
    Rng rng(3);
    LinMap a = random_matrix(f, n, n + 3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rref(a));
}
BENCHMARK(BM_Rref)->ArgsProduct({{8, 32, 64}, {0, 1}});

void BM_SplitIdempotent(benchmark::State& state) {
    Field f = field_for(state.range(1));
    std::size_t n = state.range(0);
    Rng rng(4);
    LinMap d(f, n, n);
    for (std::size_t i = 0; i < n; i += 2) d.set(i, i, Scalar(f, 1));
    LinMap g = random_invertible(f, n, rng);
    LinMap e = compose_all({g, d, *inverse(g)});
    for (auto _ : state) benchmark::DoNotOptimize(split_idempotent(e));
}
BENCHMARK(BM_SplitIdempotent)->ArgsProduct({{8, 32}, {0, 1}});

void BM_LiftedCoringG2(benchmark::State& state) {
    EntwiningDatum d = psi_R(g2(Field::rationals()));
    for (auto _ : state) benchmark::DoNotOptimize(build_lifted_coring(d, CoringKind::iota));
}
BENCHMARK(BM_LiftedCoringG2);

void BM_LiftedCoringGroupoid(benchmark::State& state) {
    Rng rng(5);
    EntwiningDatum d = psi_R(sample_groupoid_wba(Field::prime(7), rng));
    for (auto _ : state) benchmark::DoNotOptimize(build_lifted_coring(d, CoringKind::iota));
}
BENCHMARK(BM_LiftedCoringGroupoid);

void BM_ClassifyEntwining(benchmark::State& state) {
    Rng rng(6);
    EntwiningDatum d = sample_weak_entwining(Field::prime(7), rng);
    for (auto _ : state) benchmark::DoNotOptimize(classify_entwining(d));
}
BENCHMARK(BM_ClassifyEntwining);

void BM_WreathToPremonad(benchmark::State& state) {
    MonadInEMW m = weak_smash(g2(Field::rationals()));
    for (auto _ : state) benchmark::DoNotOptimize(wreath_to_premonad(m));
}
BENCHMARK(BM_WreathToPremonad);

}  // namespace

BENCHMARK_MAIN();
