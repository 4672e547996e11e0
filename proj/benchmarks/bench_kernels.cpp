#include "invcompact/baseline_schemes.hpp"
#include "invcompact/compact_ops.hpp"
#include "invcompact/experiment.hpp"
#include "invcompact/invariant_schemes.hpp"
#include "invcompact/tridiag.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace invcompact;

namespace {

std::vector<double> smooth_field(const Grid1D& g)
{
    std::vector<double> u(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        u[i] = std::sin(g.x(i)) + 2.0;
    }
    return u;
}

void BM_SolveTridiagonal(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const TriDiagSystem sys{std::vector<double>(n - 1, 1.0 / 6), std::vector<double>(n, 2.0 / 3),
                            std::vector<double>(n - 1, 1.0 / 6), std::vector<double>(n, 1.0)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_tridiagonal(sys));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SolveTridiagonal)->RangeMultiplier(4)->Range(64, 16384);

void BM_CompactDx(benchmark::State& state)
{
    const Grid1D g = Grid1D::over(0.0, 6.0, static_cast<std::size_t>(state.range(0)));
    const auto u = smooth_field(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compact_dx(u, g));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CompactDx)->RangeMultiplier(4)->Range(64, 16384);

void BM_CompactDxx(benchmark::State& state)
{
    const Grid1D g = Grid1D::over(0.0, 6.0, static_cast<std::size_t>(state.range(0)));
    const auto u = smooth_field(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compact_dxx(u, g));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CompactDxx)->RangeMultiplier(4)->Range(64, 16384);

template <Scheme S>
void BM_ViscousBurgersStep(benchmark::State& state)
{
    ExperimentSpec spec = default_spec(Pde::Vbe, S);
    spec.nx = static_cast<std::size_t>(state.range(0));
    const Grid1D g = Grid1D::over(spec.x_domain[0], spec.x_domain[1], spec.nx);
    const auto exact = exact_solution_1d(spec);
    std::vector<double> u(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        u[i] = exact(0.0, g.x(i));
    }
    const StepContext1D ctx{g, spec.params, spec.tau, 0.0, exact};
    for (auto _ : state) {
        benchmark::DoNotOptimize(advance(Pde::Vbe, S, u, ctx));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_TEMPLATE(BM_ViscousBurgersStep, Scheme::Ftcs)->Arg(101)->Arg(1001);
BENCHMARK_TEMPLATE(BM_ViscousBurgersStep, Scheme::Comp)->Arg(101)->Arg(1001);
BENCHMARK_TEMPLATE(BM_ViscousBurgersStep, Scheme::Sym)->Arg(101)->Arg(1001);

template <Scheme S>
void BM_AdvectionDiffusion2DStep(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    ExperimentSpec spec = default_spec(Pde::Ade2d, S);
    const Grid2D g = Grid2D::over(spec.x_domain[0], spec.x_domain[1], n, spec.y_domain[0],
                                  spec.y_domain[1], n);
    const auto exact = exact_solution_2d(spec);
    Field2D u(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            u(i, j) = exact(0.0, g.x(i), g.y(j));
        }
    }
    const StepContext2D ctx{g, spec.params, spec.tau, 0.0, exact};
    for (auto _ : state) {
        benchmark::DoNotOptimize(advance(S, u, ctx));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK_TEMPLATE(BM_AdvectionDiffusion2DStep, Scheme::Ftcs)->Arg(51);
BENCHMARK_TEMPLATE(BM_AdvectionDiffusion2DStep, Scheme::Comp)->Arg(51);
BENCHMARK_TEMPLATE(BM_AdvectionDiffusion2DStep, Scheme::Sym1)->Arg(51);
BENCHMARK_TEMPLATE(BM_AdvectionDiffusion2DStep, Scheme::Sym2)->Arg(51);

} // namespace

BENCHMARK_MAIN();
