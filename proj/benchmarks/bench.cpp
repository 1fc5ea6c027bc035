#include <benchmark/benchmark.h>

#include <random>

#include "mfq/quantize.hpp"

using namespace mfq;

namespace {

void BM_ExtractQ(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    QContext ctx = make_qcontext(n);
    for (auto _ : state) benchmark::DoNotOptimize(extract_Q(ctx));
}
BENCHMARK(BM_ExtractQ)->Arg(3)->Arg(4);

void BM_QuantizedAlgebra(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    QContext ctx = make_qcontext(n);
    Functional chi = random_regular_chi(ctx.ge.sub, n, 7);
    for (auto _ : state) benchmark::DoNotOptimize(quantized_algebra(ctx, chi));
}
BENCHMARK(BM_QuantizedAlgebra)->Arg(3)->Arg(4);

void BM_PBWProduct(benchmark::State& state) {
    LiePtr gl = build_gl(4);
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> gen(0, gl->dim() - 1);
    std::uniform_int_distribution<int> depth(1, 3);
    UEAElement a(gl), b(gl);
    for (int t = 0; t < 6; ++t) {
        a.add_word({{gen(rng), depth(rng)}, {gen(rng), depth(rng)}, {gen(rng), depth(rng)}}, 1);
        b.add_word({{gen(rng), depth(rng)}, {gen(rng), depth(rng)}, {gen(rng), depth(rng)}}, 1);
    }
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PBWProduct);

void BM_PoissonBracket(benchmark::State& state) {
    LiePtr gl = build_gl(4);
    Subalgebra ge = minimal_nilpotent_centralizer(gl);
    SlodowyChart chart = slodowy_chart(gl, ge);
    InvariantFamily trunc = e_truncation_family(gl_char_invariants(gl), chart, ge);
    const Poly& a = trunc.members[2];
    const Poly& b = trunc.members[3];
    for (auto _ : state) benchmark::DoNotOptimize(lie_poisson_bracket(a, b, ge.sub));
}
BENCHMARK(BM_PoissonBracket);

void BM_VacuumAction(benchmark::State& state) {
    QContext ctx = make_qcontext(4);
    std::vector<UEAElement> q = extract_Q(ctx);
    Vacuum vac{ctx.ge.sub, ctx.level};
    for (auto _ : state)
        benchmark::DoNotOptimize(vacuum_action(vac, ctx.ge_index(1, 1), 0, q.back()));
}
BENCHMARK(BM_VacuumAction);

}  // namespace

BENCHMARK_MAIN();
