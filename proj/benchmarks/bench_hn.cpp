#include <benchmark/benchmark.h>

#include "polystab/quiver.hpp"
#include "polystab/stability.hpp"

using namespace polystab;

namespace {

GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

QuiverModel a3Model() {
    QuiverModel m;
    m.vertices = {"1", "2", "3"};
    m.arrows = {{0, 1}, {1, 2}};
    m.charges = {CPoly({gr(1), gr(0, 1)}), CPoly({gr(0), gr(0, 1)}), CPoly({gr(-1), gr(0, 1)})};
    m.validate();
    return m;
}

void EnumerateSubreps(benchmark::State& state) {
    QuiverModel m = a3Model();
    QuiverRep rep = makeRep(m, {2, 2, 2}, {FMat{{1, 0}, {0, 1}}, FMat{{1, 1}, {0, 1}}});
    for (auto _ : state) benchmark::DoNotOptimize(enumerateSubreps(m, rep));
}
BENCHMARK(EnumerateSubreps);

void HnFilter(benchmark::State& state) {
    QuiverModel m = a3Model();
    QuiverRep rep = makeRep(m, {2, 2, 2}, {FMat{{1, 0}, {0, 1}}, FMat{{1, 1}, {0, 1}}});
    for (auto _ : state) benchmark::DoNotOptimize(hnFilter(m, rep));
}
BENCHMARK(HnFilter);

void CentralCharge(benchmark::State& state) {
    ModelPtr p3 = GradedRingModel::projectiveSpace(3);
    NumClass h = NumClass::basisElement(p3, 1, 0);
    OmegaData lv = largeVolumeOmega(p3, NumClass(p3), AmpleClass{h}).get();
    NumClass ch = expNil(NumClass::basisElement(p3, 1, 0, gr(2)));
    for (auto _ : state) benchmark::DoNotOptimize(centralCharge(lv, ch));
}
BENCHMARK(CentralCharge);

}  // namespace

BENCHMARK_MAIN();
