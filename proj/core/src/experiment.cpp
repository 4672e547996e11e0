#include "invcompact/experiment.hpp"

#include "invcompact/baseline_schemes.hpp"
#include "invcompact/error.hpp"
#include "invcompact/invariant_schemes.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

namespace invcompact {

namespace {

[[noreturn]] void config_error(const std::string& message)
{
    throw Error(ErrorCode::ConfigInvalid, message);
}

std::size_t step_count(double t_final, double tau)
{
    const double ratio = t_final / tau;
    const double steps = std::round(ratio);
    if (std::abs(ratio - steps) > 1e-9) {
        throw Error(ErrorCode::StepCountMismatch,
                    "t_final / tau = " + std::to_string(ratio) + " is not a whole number of steps");
    }
    return static_cast<std::size_t>(steps);
}

/// Runs fn(0..count-1) on up to `threads` workers; the first exception wins.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn)
{
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        for (std::size_t k = 0; k < count; ++k) {
            fn(k);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < count; k = next++) {
                try {
                    fn(k);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

ErrorReport blank_report(const ExperimentSpec& spec)
{
    ErrorReport r;
    r.pde = spec.pde;
    r.scheme = spec.scheme;
    r.tau = spec.tau;
    r.t_final = spec.t_final;
    r.galilean_c = spec.galilean_c.value_or(0.0);
    return r;
}

ExperimentResult simulate_1d(const ExperimentSpec& spec)
{
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();

    const Grid1D grid0 = Grid1D::over(spec.x_domain[0], spec.x_domain[1], spec.nx);
    const double c = spec.galilean_c.value_or(0.0);
    const ExactSolution1D exact = exact_solution_1d(spec);
    const std::size_t steps = step_count(spec.t_final, spec.tau);

    StepContext1D ctx{grid0, spec.params, spec.tau, 0.0, exact, c};
    Field1D u(grid0.n);
    for (std::size_t i = 0; i < grid0.n; ++i) {
        u[i] = exact(0.0, grid0.x(i));
    }

    ExperimentResult out;
    out.report = blank_report(spec);
    out.report.warnings = stability_warnings(spec.pde, ctx);

    for (std::size_t n = 0; n < steps; ++n) {
        ctx.t = static_cast<double>(n) * spec.tau;
        ctx.grid.x0 = grid0.x0 + c * ctx.t;
        u = advance(spec.pde, spec.scheme, u, ctx);
    }

    Grid1D final_grid = grid0;
    final_grid.x0 = grid0.x0 + c * spec.t_final;
    out.x = final_grid.nodes();
    out.exact.resize(out.x.size());
    for (std::size_t i = 0; i < out.x.size(); ++i) {
        out.exact[i] = exact(spec.t_final, out.x[i]);
    }
    out.numeric = std::move(u);

    out.report.nx = grid0.n;
    out.report.h = grid0.h;
    out.report.rmse = rmse(out.numeric, out.exact);
    out.report.linf = linf(out.numeric, out.exact);
    out.report.wall_time = std::chrono::duration<double>(clock::now() - start).count();
    return out;
}

ExperimentResult simulate_2d(const ExperimentSpec& spec)
{
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();

    const std::size_t ny = spec.ny == 0 ? spec.nx : spec.ny;
    const Grid2D grid = Grid2D::over(spec.x_domain[0], spec.x_domain[1], spec.nx,
                                     spec.y_domain[0], spec.y_domain[1], ny);
    const ExactSolution2D exact = exact_solution_2d(spec);
    const std::size_t steps = step_count(spec.t_final, spec.tau);

    StepContext2D ctx{grid, spec.params, spec.tau, 0.0, exact};
    Field2D u(grid.nx, grid.ny);
    for (std::size_t i = 0; i < grid.nx; ++i) {
        for (std::size_t j = 0; j < grid.ny; ++j) {
            u(i, j) = exact(0.0, grid.x(i), grid.y(j));
        }
    }

    ExperimentResult out;
    out.report = blank_report(spec);
    out.report.warnings = stability_warnings(ctx);

    for (std::size_t n = 0; n < steps; ++n) {
        ctx.t = static_cast<double>(n) * spec.tau;
        u = advance(spec.scheme, u, ctx);
    }

    out.x = grid.x_axis().nodes();
    out.y = grid.y_axis().nodes();
    out.exact.resize(u.size());
    for (std::size_t i = 0; i < grid.nx; ++i) {
        for (std::size_t j = 0; j < grid.ny; ++j) {
            out.exact[i * grid.ny + j] = exact(spec.t_final, grid.x(i), grid.y(j));
        }
    }
    out.numeric.assign(u.values().begin(), u.values().end());

    out.report.nx = grid.nx;
    out.report.ny = grid.ny;
    out.report.h = grid.hx;
    out.report.rmse = rmse(out.numeric, out.exact);
    out.report.linf = linf(out.numeric, out.exact);
    out.report.wall_time = std::chrono::duration<double>(clock::now() - start).count();
    return out;
}

} // namespace

void ExperimentSpec::validate() const
{
    if (!scheme_supports(pde, scheme)) {
        config_error("scheme '" + std::string(to_string(scheme)) + "' is not available for pde '" +
                     std::string(to_string(pde)) + "'");
    }
    if (nx < 5 || (is_two_dimensional(pde) && ny != 0 && ny < 5)) {
        config_error("n must be at least 5");
    }
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        config_error("tau must be positive and finite");
    }
    if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
        config_error("t_final must be non-negative and finite");
    }
    const auto bad_domain = [](const std::array<double, 2>& d) {
        return !std::isfinite(d[0]) || !std::isfinite(d[1]) || !(d[1] > d[0]);
    };
    if (bad_domain(x_domain) || (is_two_dimensional(pde) && bad_domain(y_domain))) {
        config_error("domain must be finite with lo < hi");
    }
    if (galilean_c && (pde != Pde::Vbe || !std::isfinite(*galilean_c))) {
        config_error("galilean_c applies to the viscous Burgers equation only");
    }
    try {
        params.validate();
    } catch (const Error& e) {
        config_error(e.what());
    }
}

ExperimentSpec default_spec(Pde pde, Scheme scheme)
{
    ExperimentSpec s;
    s.pde = pde;
    s.scheme = scheme;
    switch (pde) {
    case Pde::Ibe:
        s.x_domain = {-3.0, 3.0};
        s.nx = 31;  // h = 0.2
        s.tau = 1e-3;
        s.t_final = 0.5;
        break;
    case Pde::Ade1d:
        s.x_domain = {-2.0, 4.0};
        s.nx = 31;  // h = 0.2
        s.tau = 1e-3;
        s.t_final = 1.0;
        s.params.nu = 1.0 / 60.0;
        break;
    case Pde::Vbe:
        s.x_domain = {0.0, 2.0 * std::numbers::pi};
        s.nx = 101;  // h ~ 0.063
        s.tau = 1e-4;
        s.t_final = 0.25;
        s.params.nu = 1.0 / 12.0;
        break;
    case Pde::Ade2d:
        s.x_domain = {-4.0, 4.0};
        s.y_domain = {-4.0, 4.0};
        s.nx = 51;  // hx = hy = 0.16
        s.ny = 51;
        s.tau = 1e-4;
        s.t_final = 0.1;
        s.params.nu = 1.0 / 60.0;
        break;
    }
    return s;
}

ExactSolution1D exact_solution_1d(const ExperimentSpec& spec)
{
    const PdeParams p = spec.params;
    ExactSolution1D base;
    switch (spec.pde) {
    case Pde::Ibe: base = [p](double t, double x) { return ibe_exact(t, x, p.sigma); }; break;
    case Pde::Ade1d: base = [p](double t, double x) { return ade1d_exact(t, x, p); }; break;
    case Pde::Vbe: base = [p](double t, double x) { return vbe_exact(t, x, p.nu); }; break;
    case Pde::Ade2d:
        throw Error(ErrorCode::InvalidArgument, "ade2d has a two-dimensional exact solution");
    }
    if (spec.galilean_c) {
        return galilean_exact(std::move(base), *spec.galilean_c);
    }
    return base;
}

ExactSolution2D exact_solution_2d(const ExperimentSpec& spec)
{
    if (spec.pde != Pde::Ade2d) {
        throw Error(ErrorCode::InvalidArgument, "only ade2d has a two-dimensional exact solution");
    }
    const PdeParams p = spec.params;
    return [p](double t, double x, double y) { return ade2d_exact(t, x, y, p); };
}

Field1D advance(Pde pde, Scheme scheme, std::span<const double> u, const StepContext1D& ctx)
{
    switch (pde) {
    case Pde::Ibe:
        switch (scheme) {
        case Scheme::Ftcs: return ftcs_step_ibe(u, ctx);
        case Scheme::Comp: return comp_step_ibe(u, ctx);
        case Scheme::Sym: return sym_step_ibe(u, ctx);
        default: break;
        }
        break;
    case Pde::Ade1d:
        switch (scheme) {
        case Scheme::Ftcs: return ftcs_step_ade1d(u, ctx);
        case Scheme::Comp: return comp_step_ade1d(u, ctx);
        case Scheme::Sym: return sym_step_ade1d(u, ctx);
        default: break;
        }
        break;
    case Pde::Vbe:
        switch (scheme) {
        case Scheme::Ftcs: return ftcs_step_vbe(u, ctx);
        case Scheme::Comp: return comp_step_vbe(u, ctx);
        case Scheme::Sym: return sym_step_vbe(u, ctx);
        default: break;
        }
        break;
    case Pde::Ade2d: break;
    }
    throw Error(ErrorCode::ConfigInvalid, "no 1D scheme '" + std::string(to_string(scheme)) +
                                              "' for pde '" + std::string(to_string(pde)) + "'");
}

Field2D advance(Scheme scheme, const Field2D& u, const StepContext2D& ctx)
{
    switch (scheme) {
    case Scheme::Ftcs: return ftcs_step_ade2d(u, ctx);
    case Scheme::Comp: return comp_step_ade2d(u, ctx);
    case Scheme::Sym1: return sym_step_ade2d(u, ctx, Ade2dVariant::Sym1);
    case Scheme::Sym2: return sym_step_ade2d(u, ctx, Ade2dVariant::Sym2);
    case Scheme::Sym: break;
    }
    throw Error(ErrorCode::ConfigInvalid, "ade2d needs one of ftcs, comp, sym1, sym2");
}

ExperimentResult simulate(const ExperimentSpec& spec)
{
    spec.validate();
    return is_two_dimensional(spec.pde) ? simulate_2d(spec) : simulate_1d(spec);
}

ErrorReport run_experiment(const ExperimentSpec& spec)
{
    return simulate(spec).report;
}

ConvergenceTable convergence_study(const ExperimentSpec& base, std::span<const std::size_t> sizes,
                                   unsigned threads)
{
    std::vector<std::size_t> sorted(sizes.begin(), sizes.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() < 3 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        config_error("a convergence study needs at least three distinct grid sizes");
    }

    ConvergenceTable table;
    table.pde = base.pde;
    table.scheme = base.scheme;
    table.rows.resize(sorted.size());
    parallel_for(sorted.size(), threads, [&](std::size_t k) {
        ExperimentSpec spec = base;
        spec.nx = sorted[k];
        if (is_two_dimensional(spec.pde)) {
            spec.ny = sorted[k];
        }
        const ErrorReport r = run_experiment(spec);
        table.rows[k] = {sorted[k], r.h, r.linf};
    });

    std::vector<double> h, e;
    for (const auto& row : table.rows) {
        h.push_back(row.h);
        e.push_back(row.linf);
    }
    table.slope = fit_log_slope(h, e);
    return table;
}

std::vector<ErrorReport> galilean_experiment(const ExperimentSpec& base,
                                             std::span<const double> c_values,
                                             std::span<const Scheme> schemes, unsigned threads)
{
    if (base.pde != Pde::Vbe) {
        config_error("the Galilean experiment runs on the viscous Burgers equation");
    }
    if (c_values.empty() || schemes.empty()) {
        config_error("the Galilean experiment needs at least one c value and one scheme");
    }
    std::vector<ErrorReport> reports(c_values.size() * schemes.size());
    parallel_for(reports.size(), threads, [&](std::size_t k) {
        ExperimentSpec spec = base;
        spec.galilean_c = c_values[k / schemes.size()];
        spec.scheme = schemes[k % schemes.size()];
        reports[k] = run_experiment(spec);
    });
    return reports;
}

} // namespace invcompact
