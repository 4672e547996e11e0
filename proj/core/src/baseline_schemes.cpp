#include "invcompact/baseline_schemes.hpp"

#include "invcompact/compact_ops.hpp"
#include "step_support.hpp"

namespace invcompact {

namespace {

struct Central {
    double ux;
    double uxx;
};

Central central(std::span<const double> u, std::size_t i, double h)
{
    return {(u[i + 1] - u[i - 1]) / (2.0 * h), (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h)};
}

} // namespace

Field1D ftcs_step_ibe(std::span<const double> u, const StepContext1D& ctx)
{
    detail::require_matching(u, ctx);
    const double h = ctx.grid.h;
    return detail::update_interior(u, ctx, [&](std::size_t i) {
        return u[i] - ctx.tau * u[i] * central(u, i, h).ux;
    });
}

Field1D ftcs_step_ade1d(std::span<const double> u, const StepContext1D& ctx)
{
    detail::require_matching(u, ctx);
    const double h = ctx.grid.h;
    const auto& p = ctx.params;
    return detail::update_interior(u, ctx, [&](std::size_t i) {
        const Central d = central(u, i, h);
        return u[i] - ctx.tau * (p.alpha * d.ux - p.nu * d.uxx);
    });
}

Field1D ftcs_step_vbe(std::span<const double> u, const StepContext1D& ctx)
{
    detail::require_matching(u, ctx);
    const double h = ctx.grid.h;
    const double nu = ctx.params.nu;
    return detail::update_interior(u, ctx, [&](std::size_t i) {
        const Central d = central(u, i, h);
        return u[i] - ctx.tau * (u[i] * d.ux - nu * d.uxx);
    });
}

Field2D ftcs_step_ade2d(const Field2D& u, const StepContext2D& ctx)
{
    detail::require_matching(u, ctx);
    const auto& g = ctx.grid;
    const auto& p = ctx.params;
    return detail::update_interior(u, ctx, [&](std::size_t i, std::size_t j) {
        const double ux = (u(i + 1, j) - u(i - 1, j)) / (2.0 * g.hx);
        const double uy = (u(i, j + 1) - u(i, j - 1)) / (2.0 * g.hy);
        const double uxx = (u(i + 1, j) - 2.0 * u(i, j) + u(i - 1, j)) / (g.hx * g.hx);
        const double uyy = (u(i, j + 1) - 2.0 * u(i, j) + u(i, j - 1)) / (g.hy * g.hy);
        return u(i, j) - ctx.tau * (p.alpha * ux + p.beta * uy - p.nu * (uxx + uyy));
    });
}

Field1D comp_step_ibe(std::span<const double> u, const StepContext1D& ctx)
{
    detail::require_matching(u, ctx);
    const Field1D ux = compact_dx(u, ctx.grid);
    const Field1D uxx = compact_dxx(u, ctx.grid);
    const double tau = ctx.tau;
    return detail::update_interior(u, ctx, [&](std::size_t i) {
        const double defect = -0.5 * tau * (u[i] * u[i] * uxx[i] + 2.0 * u[i] * ux[i] * ux[i]);
        return u[i] - tau * u[i] * ux[i] - tau * defect;
    });
}

Field1D comp_step_ade1d(std::span<const double> u, const StepContext1D& ctx)
{
    detail::require_matching(u, ctx);
    const Field1D ux = compact_dx(u, ctx.grid);
    const Field1D uxx = compact_dxx(u, ctx.grid);
    const auto& p = ctx.params;
    return detail::update_interior(u, ctx, [&](std::size_t i) {
        return u[i] - ctx.tau * (p.alpha * ux[i] - p.nu * uxx[i]);
    });
}

Field1D comp_step_vbe(std::span<const double> u, const StepContext1D& ctx)
{
    detail::require_matching(u, ctx);
    const Field1D ux = compact_dx(u, ctx.grid);
    const Field1D uxx = compact_dxx(u, ctx.grid);
    const double nu = ctx.params.nu;
    return detail::update_interior(u, ctx, [&](std::size_t i) {
        return u[i] - ctx.tau * (u[i] * ux[i] - nu * uxx[i]);
    });
}

Field2D comp_step_ade2d(const Field2D& u, const StepContext2D& ctx)
{
    detail::require_matching(u, ctx);
    const Field2D ux = compact_dx_along_x(u, ctx.grid);
    const Field2D uy = compact_dx_along_y(u, ctx.grid);
    const Field2D uxx = compact_dxx_along_x(u, ctx.grid);
    const Field2D uyy = compact_dxx_along_y(u, ctx.grid);
    const auto& p = ctx.params;
    return detail::update_interior(u, ctx, [&](std::size_t i, std::size_t j) {
        return u(i, j) - ctx.tau * (p.alpha * ux(i, j) + p.beta * uy(i, j) -
                                    p.nu * (uxx(i, j) + uyy(i, j)));
    });
}

} // namespace invcompact
