#include <benchmark/benchmark.h>

#include "chowpoly/cycle.hpp"
#include "chowpoly/integrate.hpp"
#include "chowpoly/parser.hpp"

using namespace chowpoly;

namespace {

MultiPoly var(const std::string& n) { return MultiPoly::variable(n); }

void bm_factor(benchmark::State& state) {
    MultiPoly x = var("x"), y = var("y");
    MultiPoly one{Rat(1)};
    MultiPoly p = (x * x - one) * (x + y) * (x + y) * (y - MultiPoly{Rat(2)}) * Rat(12);
    for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(bm_factor);

void bm_wedge_expand(benchmark::State& state) {
    MultiPoly x = var("x"), y = var("y");
    MultiPoly one{Rat(1)};
    FactoredRational f = factor((x * x - one) * Rat(6));
    FactoredRational g = factor_fraction(x + y, y - one);
    FactoredRational h = factor((y + MultiPoly{Rat(2)}) * (x - y));
    for (auto _ : state) benchmark::DoNotOptimize(wedge_of({f, g, h}));
}
BENCHMARK(bm_wedge_expand);

void bm_differential(benchmark::State& state) {
    Cycle c = parse_cycle(R"([[x,y], (1-x)/\y/\(y-2*x)/\(y-3)])");
    for (auto _ : state) benchmark::DoNotOptimize(normalize_cycle(differential(c)));
}
BENCHMARK(bm_differential);

void bm_parse_print(benchmark::State& state) {
    WedgeElement w = parse_wedge(R"(2*(1-x)/\x/\(x-2)  -  (x+1)/\(x-3)/\x)");
    std::string text = w.to_string();
    for (auto _ : state) benchmark::DoNotOptimize(parse_wedge(text));
}
BENCHMARK(bm_parse_print);

void bm_chow_integral(benchmark::State& state) {
    std::vector<CSlot> slots = omega_slots(2, Complex(0, 1));
    IntegralCfg cfg;
    cfg.samples = static_cast<std::uint64_t>(state.range(0));
    cfg.workers = 1;
    for (auto _ : state) benchmark::DoNotOptimize(chow_integral(1, slots, cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_chow_integral)->Arg(10000)->Arg(100000);

void bm_sv_polylog(benchmark::State& state) {
    Complex z(0.8, 0.6);
    for (auto _ : state) benchmark::DoNotOptimize(sv_polylog(2, z));
}
BENCHMARK(bm_sv_polylog);

}  // namespace

BENCHMARK_MAIN();
