#include "invcompact/schemes.hpp"

#include "invcompact/error.hpp"

#include <cmath>
#include <sstream>

namespace invcompact {

std::string_view to_string(Pde pde) noexcept
{
    switch (pde) {
    case Pde::Ibe: return "ibe";
    case Pde::Ade1d: return "ade1d";
    case Pde::Vbe: return "vbe";
    case Pde::Ade2d: return "ade2d";
    }
    return "?";
}

std::string_view to_string(Scheme scheme) noexcept
{
    switch (scheme) {
    case Scheme::Ftcs: return "ftcs";
    case Scheme::Comp: return "comp";
    case Scheme::Sym: return "sym";
    case Scheme::Sym1: return "sym1";
    case Scheme::Sym2: return "sym2";
    }
    return "?";
}

std::optional<Pde> parse_pde(std::string_view name) noexcept
{
    for (Pde p : {Pde::Ibe, Pde::Ade1d, Pde::Vbe, Pde::Ade2d}) {
        if (to_string(p) == name) {
            return p;
        }
    }
    return std::nullopt;
}

std::optional<Scheme> parse_scheme(std::string_view name) noexcept
{
    for (Scheme s : {Scheme::Ftcs, Scheme::Comp, Scheme::Sym, Scheme::Sym1, Scheme::Sym2}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

bool is_two_dimensional(Pde pde) noexcept
{
    return pde == Pde::Ade2d;
}

bool scheme_supports(Pde pde, Scheme scheme) noexcept
{
    switch (scheme) {
    case Scheme::Ftcs:
    case Scheme::Comp: return true;
    case Scheme::Sym: return !is_two_dimensional(pde);
    case Scheme::Sym1:
    case Scheme::Sym2: return is_two_dimensional(pde);
    }
    return false;
}

namespace {

void diffusion_bound(std::vector<std::string>& out, double nu, double tau, double h,
                     const char* axis)
{
    const double number = nu * tau / (h * h);
    if (number > 0.5) {
        std::ostringstream os;
        os << "diffusion number nu*tau/h^2 = " << number << " exceeds 0.5 along " << axis;
        out.push_back(os.str());
    }
}

void courant_bound(std::vector<std::string>& out, double speed, double tau, double h,
                   const char* axis)
{
    const double number = std::abs(speed) * tau / h;
    if (number > 1.0) {
        std::ostringstream os;
        os << "Courant number |speed|*tau/h = " << number << " exceeds 1 along " << axis;
        out.push_back(os.str());
    }
}

} // namespace

std::vector<std::string> stability_warnings(Pde pde, const StepContext1D& ctx)
{
    std::vector<std::string> out;
    const double h = ctx.grid.h;
    if (pde == Pde::Ade1d || pde == Pde::Vbe) {
        diffusion_bound(out, ctx.params.nu, ctx.tau, h, "x");
    }
    if (pde == Pde::Ade1d) {
        courant_bound(out, ctx.params.alpha, ctx.tau, h, "x");
    }
    return out;
}

std::vector<std::string> stability_warnings(const StepContext2D& ctx)
{
    std::vector<std::string> out;
    diffusion_bound(out, ctx.params.nu, ctx.tau, ctx.grid.hx, "x");
    diffusion_bound(out, ctx.params.nu, ctx.tau, ctx.grid.hy, "y");
    courant_bound(out, ctx.params.alpha, ctx.tau, ctx.grid.hx, "x");
    courant_bound(out, ctx.params.beta, ctx.tau, ctx.grid.hy, "y");
    return out;
}

namespace detail {

void require_matching(std::span<const double> u, const StepContext1D& ctx)
{
    ctx.grid.validate();
    if (u.size() != ctx.grid.n) {
        throw Error(ErrorCode::ShapeMismatch, "field has " + std::to_string(u.size()) +
                                                  " values but grid has " +
                                                  std::to_string(ctx.grid.n));
    }
    if (!(ctx.tau > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "tau must be positive");
    }
    if (!ctx.boundary) {
        throw Error(ErrorCode::InvalidArgument, "step context has no boundary provider");
    }
}

void require_matching(const Field2D& u, const StepContext2D& ctx)
{
    ctx.grid.validate();
    if (!u.matches(ctx.grid)) {
        throw Error(ErrorCode::ShapeMismatch, "2D field does not match its grid");
    }
    if (!(ctx.tau > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "tau must be positive");
    }
    if (!ctx.boundary) {
        throw Error(ErrorCode::InvalidArgument, "step context has no boundary provider");
    }
}

void apply_dirichlet(Field1D& u, const StepContext1D& ctx)
{
    const double t_next = ctx.t + ctx.tau;
    const double shift = ctx.mesh_velocity * ctx.tau;
    u.front() = ctx.boundary(t_next, ctx.grid.x(0) + shift);
    u.back() = ctx.boundary(t_next, ctx.grid.x_last() + shift);
}

void apply_dirichlet(Field2D& u, const StepContext2D& ctx)
{
    const double t_next = ctx.t + ctx.tau;
    const auto& g = ctx.grid;
    for (std::size_t i = 0; i < g.nx; ++i) {
        u(i, 0) = ctx.boundary(t_next, g.x(i), g.y(0));
        u(i, g.ny - 1) = ctx.boundary(t_next, g.x(i), g.y(g.ny - 1));
    }
    for (std::size_t j = 1; j + 1 < g.ny; ++j) {
        u(0, j) = ctx.boundary(t_next, g.x(0), g.y(j));
        u(g.nx - 1, j) = ctx.boundary(t_next, g.x(g.nx - 1), g.y(j));
    }
}

void require_finite(std::span<const double> u)
{
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!std::isfinite(u[i])) {
            throw Error(ErrorCode::NonFinite,
                        "non-finite value at node " + std::to_string(i) + " (unstable step?)", i);
        }
    }
}

} // namespace detail

} // namespace invcompact
