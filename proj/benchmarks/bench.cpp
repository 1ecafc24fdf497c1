#include <benchmark/benchmark.h>

#include "qweyl/cyclotomic.hpp"
#include "qweyl/modules.hpp"
#include "qweyl/pidegree.hpp"
#include "qweyl/weyl.hpp"

using namespace qweyl;

namespace {

Params sample_params(const FieldPtr& ctx) {
    return Params::make(ctx, CycNum::from_int(ctx, 2), q2pow(ctx, 1) + CycNum::one(ctx),
                        CycNum::from_rat(ctx, Rat(1, 3)));
}

void bm_field_mul(benchmark::State& state) {
    auto ctx = FieldCtx::make(state.range(0));
    CycNum a = q2pow(ctx, 1) + CycNum::from_int(ctx, 3);
    CycNum b = qint(ctx, state.range(0) - 1) - CycNum::from_rat(ctx, Rat(1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_field_mul)->Arg(5)->Arg(12)->Arg(24);

void bm_field_inv(benchmark::State& state) {
    auto ctx = FieldCtx::make(state.range(0));
    CycNum a = q2pow(ctx, 1) + CycNum::from_int(ctx, 3);
    for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(bm_field_inv)->Arg(5)->Arg(12)->Arg(24);

void bm_mono_mul(benchmark::State& state) {
    const long l = state.range(0);
    auto ctx = FieldCtx::make(l);
    Params p = sample_params(ctx);
    Mono m1{0, static_cast<int>(l), static_cast<int>(l)};
    Mono m2{static_cast<int>(l), static_cast<int>(l), 0};
    for (auto _ : state) benchmark::DoNotOptimize(mono_mul(m1, m2, p));
}
BENCHMARK(bm_mono_mul)->Arg(3)->Arg(6)->Arg(9);

void bm_rewrite_oracle_mul(benchmark::State& state) {
    const long l = state.range(0);
    auto ctx = FieldCtx::make(l);
    Params p = sample_params(ctx);
    Mono m1{0, static_cast<int>(l), static_cast<int>(l)};
    Mono m2{static_cast<int>(l), static_cast<int>(l), 0};
    for (auto _ : state) benchmark::DoNotOptimize(rewrite_oracle_mul(m1, m2, p));
}
BENCHMARK(bm_rewrite_oracle_mul)->Arg(3)->Arg(6)->Arg(9);

void bm_pideg_bruteforce(benchmark::State& state) {
    IntMat h = weyl_exponent_matrix();
    for (auto _ : state) benchmark::DoNotOptimize(pideg_bruteforce(h, state.range(0)));
}
BENCHMARK(bm_pideg_bruteforce)->Arg(6)->Arg(12);

void bm_burnside(benchmark::State& state) {
    const long l = state.range(0);
    auto ctx = FieldCtx::make(l);
    Params p = sample_params(ctx);
    FamilySpec spec{Family::M1,
                    {{"mu1", CycNum::from_int(ctx, 2)},
                     {"mu2", CycNum::from_int(ctx, 3)},
                     {"mu3", CycNum::from_int(ctx, 1)}}};
    Rep rep = build_family(spec, p);
    for (auto _ : state) benchmark::DoNotOptimize(is_simple_burnside(rep));
}
BENCHMARK(bm_burnside)->Arg(3)->Arg(5);

void bm_classify(benchmark::State& state) {
    const long l = state.range(0);
    auto ctx = FieldCtx::make(l);
    Params p = sample_params(ctx);
    FamilySpec spec{Family::M1,
                    {{"mu1", CycNum::from_int(ctx, 2)},
                     {"mu2", CycNum::from_int(ctx, 3)},
                     {"mu3", CycNum::from_int(ctx, 1)}}};
    Rep rep = build_family(spec, p);
    Hints hints;
    for (long k = 0; k < l; ++k)
        hints.z_eigenvalues.push_back(q2pow(ctx, k) * spec.param("mu2"));
    for (auto _ : state) benchmark::DoNotOptimize(classify(rep, hints));
}
BENCHMARK(bm_classify)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
