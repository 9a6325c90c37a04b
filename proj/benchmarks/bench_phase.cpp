#include <benchmark/benchmark.h>

#include "polystab/phase.hpp"
#include "../tests/support/gen.hpp"

using namespace polystab;

namespace {

std::vector<std::pair<PhaseGerm, PhaseGerm>> germPairs(int count, int maxDeg) {
    testgen::Rng rng(42);
    std::vector<std::pair<PhaseGerm, PhaseGerm>> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.emplace_back(rng.germ(maxDeg), rng.germ(maxDeg));
    return out;
}

void CmpPhase(benchmark::State& state) {
    auto pairs = germPairs(1024, static_cast<int>(state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) {
        auto& [a, b] = pairs[i++ & 1023];
        benchmark::DoNotOptimize(cmpPhase(a, b));
    }
}
BENCHMARK(CmpPhase)->Arg(2)->Arg(4)->Arg(8);

void StabilizationBound(benchmark::State& state) {
    auto pairs = germPairs(1024, 4);
    std::size_t i = 0;
    for (auto _ : state) {
        auto& [a, b] = pairs[i++ & 1023];
        benchmark::DoNotOptimize(stabilizationBound(a, b));
    }
}
BENCHMARK(StabilizationBound);

void EvalPoly(benchmark::State& state) {
    testgen::Rng rng(7);
    CPoly p = rng.poly(8);
    Rational m(1000003, 7);
    for (auto _ : state) benchmark::DoNotOptimize(evalPoly(p, m));
}
BENCHMARK(EvalPoly);

}  // namespace

BENCHMARK_MAIN();
