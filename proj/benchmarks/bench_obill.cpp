#include "obill/io.hpp"
#include "obill/renorm_dodecagon.hpp"
#include "obill/structure.hpp"

#include <benchmark/benchmark.h>

using namespace obill;

static void BM_QuadExtMultiplyAdd(benchmark::State& state) {
    const QuadExt x = QuadExt::parse("3/7-2/5*sqrt3");
    const QuadExt y = QuadExt::parse("-11/13+1/9*sqrt3");
    QuadExt acc(0);
    for (auto _ : state) {
        acc = x * y + acc;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_QuadExtMultiplyAdd);

static void BM_QuadExtSign(benchmark::State& state) {
    const QuadExt x = QuadExt::parse("7-4*sqrt3") - QuadExt::parse("71/1000");
    for (auto _ : state) benchmark::DoNotOptimize(x.sign());
}
BENCHMARK(BM_QuadExtSign);

static void BM_StepDodecagon(benchmark::State& state) {
    const BilliardTable t = make_table(TableKind::Dodecagon);
    Point x = parse_point("3+1/7*sqrt3,1/2");
    for (auto _ : state) {
        x = step(t, x);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_StepDodecagon);

static void BM_OrbitSquareRing(benchmark::State& state) {
    const BilliardTable t = make_table(TableKind::Square);
    const Point x(QuadExt(Rational(1, 3)), QuadExt(Rational(2 * state.range(0) + 1, 2)));
    for (auto _ : state) benchmark::DoNotOptimize(orbit(t, x, 1'000'000).steps);
}
BENCHMARK(BM_OrbitSquareRing)->Arg(10)->Arg(100);

static void BM_ComponentOctagon(benchmark::State& state) {
    const BilliardTable t = make_table(TableKind::Octagon);
    const Point x = parse_point("2,1/3");
    for (auto _ : state) benchmark::DoNotOptimize(component_of(t, x).period);
}
BENCHMARK(BM_ComponentOctagon);

static void BM_ReturnPartitionSmallRocket(benchmark::State& state) {
    const auto sys = dodecagon::build_rocket_system();
    for (auto _ : state)
        benchmark::DoNotOptimize(dodecagon::rocket_return_table(sys, dodecagon::Target::Small).size());
}
BENCHMARK(BM_ReturnPartitionSmallRocket)->Unit(benchmark::kMillisecond);

static void BM_ScanOctagon(benchmark::State& state) {
    const BilliardTable t = make_table(TableKind::Octagon);
    const ScanWindow w{QuadExt(-3), QuadExt(-3), QuadExt(3), QuadExt(3)};
    for (auto _ : state) benchmark::DoNotOptimize(scan_classify(t, w, 32, 32, 2000, 1).labels.size());
}
BENCHMARK(BM_ScanOctagon)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
