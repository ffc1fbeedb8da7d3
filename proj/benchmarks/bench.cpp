#include <benchmark/benchmark.h>

#include "mh/bounds.hpp"
#include "mh/homotopy.hpp"
#include "mh/liftz.hpp"
#include "mh/mod.hpp"
#include "mh/rng.hpp"
#include "mh/sysfile.hpp"

namespace {

const char* kBilinear3 = R"({
  "blocks": [["x11"], ["x21", "x22"]],
  "equations": [
    "-16*x11*x21 + 8*x11",
    "-8*x11*x21 - 16*x11*x22 - 4*x11",
    "3*x11*x21 + 4*x11*x22 + x11 + 2*x21 + 4"
  ]
})";

void BM_BezoutNumber(benchmark::State& state) {
    mh::BlockStructure n{{2, 2, 2}};
    mh::MultiDegree d(6, {2, 2, 2});
    for (auto _ : state) benchmark::DoNotOptimize(mh::bezout_number(n, d));
}
BENCHMARK(BM_BezoutNumber);

void BM_PolyMulModP(benchmark::State& state) {
    auto fp = mh::ModRing::make(mh::Integer(10007));
    std::vector<mh::Mod> a, b;
    mh::Rng rng(1);
    for (int i = 0; i < 64; ++i) {
        a.emplace_back(mh::Integer(rng.below(uint64_t(10007))), fp);
        b.emplace_back(mh::Integer(rng.below(uint64_t(10007))), fp);
    }
    mh::Poly<mh::Mod> pa(a), pb(b);
    for (auto _ : state) benchmark::DoNotOptimize(pa * pb);
}
BENCHMARK(BM_PolyMulModP);

void BM_ModularSolveBilinear3(benchmark::State& state) {
    auto sys = mh::parse_system_json(kBilinear3);
    auto fp = mh::ModRing::make(mh::Integer(10007));
    auto prog = mh::slp_reduce_mod_p(sys.prog, fp->p);
    mh::Mod sample(0, fp);
    for (auto _ : state) {
        mh::Rng rng(state.iterations());
        benchmark::DoNotOptimize(
            mh::nonsingular_solutions(prog, sys.blocks, sys.d, sample, rng));
    }
}
BENCHMARK(BM_ModularSolveBilinear3);

void BM_SolveOverZBilinear3(benchmark::State& state) {
    auto sys = mh::parse_system_json(kBilinear3);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            mh::solve_over_z(sys.prog, sys.blocks, sys.d, sys.s, 42, 3));
}
BENCHMARK(BM_SolveOverZBilinear3);

} // namespace

BENCHMARK_MAIN();
