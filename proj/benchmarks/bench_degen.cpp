#include <benchmark/benchmark.h>

#include "degen/dowling.hpp"
#include "degen/genfun.hpp"
#include "degen/poisson_lab.hpp"
#include "degen/stirling.hpp"

using namespace degen;

// One triangle of degenerate Stirling numbers by basis conversion; the table
// cache is bypassed so each iteration does the full work.
static void BM_DegStirling2Triangle(benchmark::State& state) {
    const int nmax = static_cast<int>(state.range(0));
    const Rat lambda(-1, 3);
    for (auto _ : state)
        for (int n = 0; n <= nmax; ++n) benchmark::DoNotOptimize(to_falling_basis(deg_falling_poly(n, lambda)));
}
BENCHMARK(BM_DegStirling2Triangle)->Arg(10)->Arg(20)->Arg(40);

static void BM_SeriesExp(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    RatSeries s = e_lambda_series(Rat(1), Rat(1, 2), order) - RatSeries::one(order, Rat(0));
    for (auto _ : state) benchmark::DoNotOptimize(series_exp(s));
}
BENCHMARK(BM_SeriesExp)->Arg(10)->Arg(20)->Arg(40);

static void BM_SymbolicDowlingSeries(benchmark::State& state) {
    GfSpec spec{GfKind::DEG_R_DOWLING, DegParams(Rat(1, 2), 3, 2), std::nullopt,
                static_cast<std::size_t>(state.range(0)), Rat(1)};
    for (auto _ : state) benchmark::DoNotOptimize(gf_coefficients(spec));
}
BENCHMARK(BM_SymbolicDowlingSeries)->Arg(10)->Arg(16);

static void BM_TheoremRhs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DegParams p(Rat(-1, 3), 3, 2);
    for (auto _ : state)
        for (TheoremId id : {TheoremId::C5, TheoremId::T6, TheoremId::T7, TheoremId::T8, TheoremId::T10R,
                             TheoremId::T11})
            benchmark::DoNotOptimize(thm_rhs(id, p, n));
}
BENCHMARK(BM_TheoremRhs)->Arg(5)->Arg(10);

static void BM_PoissonSampler(benchmark::State& state) {
    PoissonSampler sampler(static_cast<double>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(sampler());
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PoissonSampler)->Arg(1)->Arg(10)->Arg(100);

static void BM_DegMomentEstimate(benchmark::State& state) {
    const PoissonSpec spec{1.0, 42, static_cast<std::uint64_t>(state.range(0)), 1};
    for (auto _ : state) benchmark::DoNotOptimize(estimate_deg_moment(DegParams(Rat(1, 2), 2, 1), 3, Rat(2), spec));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DegMomentEstimate)->Arg(100'000)->Arg(1'000'000);

BENCHMARK_MAIN();
