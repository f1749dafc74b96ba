#include <benchmark/benchmark.h>

#include "mstab/group_ring.hpp"
#include "mstab/resolution.hpp"
#include "mstab/rng.hpp"

using namespace mstab;

static void BM_WittMul(benchmark::State& state) {
    Rng rng(1);
    WittNumber a(rng.next(), rng.next(), 30), b(rng.next(), rng.next(), 30);
    for (auto _ : state) {
        a = a * b + a;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_WittMul);

static void BM_OrderMul(benchmark::State& state) {
    int N = int(state.range(0));
    int p = (N + 1) / 2;
    Rng rng(2);
    OrderElement a(WittNumber(rng.next(), rng.next(), p), WittNumber(rng.next(), rng.next(), p));
    OrderElement b(WittNumber(rng.next(), rng.next(), p), WittNumber(rng.next(), rng.next(), p));
    for (auto _ : state) {
        a = a * b;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_OrderMul)->Arg(16)->Arg(32);

static void BM_OrderInverse(benchmark::State& state) {
    OrderElement g = named_element(Name::i, 24);
    for (auto _ : state) {
        benchmark::DoNotOptimize(g.inverse());
    }
}
BENCHMARK(BM_OrderInverse);

static void BM_QMul(benchmark::State& state) {
    int n = int(state.range(0));
    QuotientElement a = q_named(Name::alpha, SubgroupTag::S21, n);
    QuotientElement b = q_named(Name::i, SubgroupTag::S21, n);
    for (auto _ : state) {
        b = q_mul(a, b);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_QMul)->Arg(4)->Arg(8);

static void BM_Enumerate(benchmark::State& state) {
    int n = int(state.range(0));
    for (auto _ : state) {
        auto Q = QuotientGroup::enumerate(SubgroupTag::S21, n);
        benchmark::DoNotOptimize(Q.size());
    }
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_HowellInsert(benchmark::State& state) {
    int dim = int(state.range(0));
    Rng rng(3);
    for (auto _ : state) {
        HowellBasis b(dim, 3);
        for (int t = 0; t < dim; ++t) {
            std::vector<uint8_t> row(dim);
            for (auto& x : row) x = uint8_t(rng.below(8));
            b.insert(std::move(row));
        }
        benchmark::DoNotOptimize(b.row_count());
    }
}
BENCHMARK(BM_HowellInsert)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_ThetaBuild(benchmark::State& state) {
    for (auto _ : state) {
        DualityComplex cx(6, 3);
        benchmark::DoNotOptimize(cx.theta().support_size());
    }
}
BENCHMARK(BM_ThetaBuild)->Unit(benchmark::kMillisecond);

static void BM_ThetaCongruences(benchmark::State& state) {
    for (auto _ : state) {
        DualityComplex cx(6, 3);
        auto rs = cx.verify_theta_congruences();
        benchmark::DoNotOptimize(rs.size());
    }
}
BENCHMARK(BM_ThetaCongruences)->Unit(benchmark::kMillisecond);

static void BM_IdealSpanJ(benchmark::State& state) {
    int m = int(state.range(0));
    auto Q = std::make_shared<QuotientGroup>(QuotientGroup::enumerate(SubgroupTag::S21, 6));
    CosetSpace ring = ring_space(Q);
    for (auto _ : state) {
        HowellBasis span = ideal_span(IdealSpec::script_J(), ring, m, ring.identity_coset());
        benchmark::DoNotOptimize(span.row_count());
    }
}
BENCHMARK(BM_IdealSpanJ)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
