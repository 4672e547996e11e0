#include "invcompact/invariant_schemes.hpp"

#include "invcompact/baseline_schemes.hpp"
#include "invcompact/compact_ops.hpp"
#include "invcompact/error.hpp"
#include "step_support.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace invcompact {

namespace {

void require_regular(double lambda, std::size_t node)
{
    if (!(std::abs(lambda) >= kFrameSingularityTolerance)) {
        throw Error(ErrorCode::FrameSingularity,
                    "lambda = " + std::to_string(lambda) + " at node " + std::to_string(node),
                    node);
    }
}

void require_positive(double lambda, std::size_t node)
{
    if (!(lambda > kFrameSingularityTolerance)) {
        throw Error(ErrorCode::FrameSingularity,
                    "lambda = " + std::to_string(lambda) + " must be positive at node " +
                        std::to_string(node),
                    node);
    }
}

void require_nonzero_state(double u, std::size_t node)
{
    if (!(std::abs(u) >= kZeroStateTolerance)) {
        throw Error(ErrorCode::ZeroState,
                    "frame divides by u = " + std::to_string(u) + " at node " +
                        std::to_string(node),
                    node);
    }
}

} // namespace

MovingFrame burgers_frame(double ux, double tau)
{
    MovingFrame f;
    f.s1 = -ux;
    f.lambda_next = 1.0 - f.s1 * tau;
    return f;
}

MovingFrame ade1d_frame(double u, double uxx, const PdeParams& p, double tau)
{
    MovingFrame f;
    f.s1 = p.nu * uxx / u;
    f.lambda_next = 1.0 - 2.0 * f.s1 * tau;
    f.gamma_next = -p.alpha * tau;
    return f;
}

MovingFrame ade2d_frame(double u, double uxx, double uyy, const PdeParams& p, double tau,
                        Ade2dVariant variant)
{
    MovingFrame f;
    f.s1 = variant == Ade2dVariant::Sym1 ? uxx / (2.0 * u) : (uxx + uyy) / (4.0 * u);
    f.lambda_next = 1.0 - 4.0 * p.nu * f.s1 * tau;
    f.gamma_next = -p.alpha * tau;
    f.theta_next = -p.beta * tau;
    return f;
}

// With u~ = lambda u E, E = exp(-s1 (gamma^2 + theta^2) / lambda), and
// d/dx~ = lambda d/dx at fixed t~, the chain rule gives the jet below.
Jet2D ade2d_forward(const Jet2D& jet, double s1, double lambda, double gamma, double theta)
{
    const double e = std::exp(-s1 * (gamma * gamma + theta * theta) / lambda);
    const double l2 = lambda * lambda;
    const double l3 = l2 * lambda;
    Jet2D out;
    out.u = lambda * jet.u * e;
    out.ux = (l2 * jet.ux - 2.0 * lambda * gamma * s1 * jet.u) * e;
    out.uy = (l2 * jet.uy - 2.0 * lambda * theta * s1 * jet.u) * e;
    out.uxx = (4.0 * lambda * gamma * gamma * s1 * s1 * jet.u - 2.0 * l2 * s1 * jet.u -
               4.0 * l2 * gamma * s1 * jet.ux + l3 * jet.uxx) *
              e;
    out.uyy = (4.0 * lambda * theta * theta * s1 * s1 * jet.u - 2.0 * l2 * s1 * jet.u -
               4.0 * l2 * theta * s1 * jet.uy + l3 * jet.uyy) *
              e;
    return out;
}

Jet2D ade2d_inverse(const Jet2D& transformed, double s1, double lambda, double gamma,
                    double theta)
{
    const double inv_e = std::exp(s1 * (gamma * gamma + theta * theta) / lambda);
    const double l2 = lambda * lambda;
    const double l3 = l2 * lambda;
    Jet2D out;
    out.u = transformed.u * inv_e / lambda;
    out.ux = (transformed.ux * inv_e + 2.0 * lambda * gamma * s1 * out.u) / l2;
    out.uy = (transformed.uy * inv_e + 2.0 * lambda * theta * s1 * out.u) / l2;
    out.uxx = (transformed.uxx * inv_e - 4.0 * lambda * gamma * gamma * s1 * s1 * out.u +
               2.0 * l2 * s1 * out.u + 4.0 * l2 * gamma * s1 * out.ux) /
              l3;
    out.uyy = (transformed.uyy * inv_e - 4.0 * lambda * theta * theta * s1 * s1 * out.u +
               2.0 * l2 * s1 * out.u + 4.0 * l2 * theta * s1 * out.uy) /
              l3;
    return out;
}

Field1D sym_step_ibe(std::span<const double> u, const StepContext1D& ctx)
{
    detail::require_matching(u, ctx);
    const Field1D ux = compact_dx(u, ctx.grid);
    const Field1D uxx = compact_dxx(u, ctx.grid);
    const double tau = ctx.tau;
    return detail::update_interior(u, ctx, [&](std::size_t i) {
        const MovingFrame f = burgers_frame(ux[i], tau);
        const double lam = f.lambda_next;
        require_regular(lam, i);
        return (u[i] + tau * tau / (2.0 * lam * lam) * u[i] * u[i] * uxx[i]) / lam;
    });
}

Field1D sym_step_ade1d(std::span<const double> u, const StepContext1D& ctx)
{
    detail::require_matching(u, ctx);
    const Field1D ux = compact_dx(u, ctx.grid);
    const Field1D uxx = compact_dxx(u, ctx.grid);
    const auto& p = ctx.params;
    const double tau = ctx.tau;
    return detail::update_interior(u, ctx, [&](std::size_t i) {
        require_nonzero_state(u[i], i);
        const MovingFrame f = ade1d_frame(u[i], uxx[i], p, tau);
        const double lam = f.lambda_next;
        require_positive(lam, i);
        // s1 / nu = u_xx / u keeps the exponent finite as nu -> 0.
        const double exponent = (uxx[i] / u[i]) * p.alpha * p.alpha * tau * tau / (2.0 * lam);
        return std::pow(lam, -1.5) * (lam * u[i] - tau * p.alpha * ux[i]) * std::exp(exponent);
    });
}

Field1D sym_step_vbe(std::span<const double> u, const StepContext1D& ctx)
{
    detail::require_matching(u, ctx);
    const Field1D ux = compact_dx(u, ctx.grid);
    const Field1D uxx = compact_dxx(u, ctx.grid);
    const double tau = ctx.tau;
    const double nu = ctx.params.nu;
    const double displacement = ctx.mesh_velocity * tau;
    return detail::update_interior(u, ctx, [&](std::size_t i) {
        const MovingFrame f = burgers_frame(ux[i], tau);
        const double lam = f.lambda_next;
        require_regular(lam, i);
        return (u[i] - f.s1 * displacement + tau * nu / lam * uxx[i]) / lam;
    });
}

Field2D sym_step_ade2d(const Field2D& u, const StepContext2D& ctx, Ade2dVariant variant)
{
    detail::require_matching(u, ctx);
    const Field2D ux = compact_dx_along_x(u, ctx.grid);
    const Field2D uy = compact_dx_along_y(u, ctx.grid);
    const Field2D uxx = compact_dxx_along_x(u, ctx.grid);
    const Field2D uyy = compact_dxx_along_y(u, ctx.grid);
    const auto& p = ctx.params;
    const double tau = ctx.tau;
    const std::size_t ny = u.ny();
    return detail::update_interior(u, ctx, [&](std::size_t i, std::size_t j) {
        const std::size_t node = i * ny + j;
        const Jet2D jet{u(i, j), ux(i, j), uy(i, j), uxx(i, j), uyy(i, j)};
        require_nonzero_state(jet.u, node);
        const MovingFrame f = ade2d_frame(jet.u, jet.uxx, jet.uyy, p, tau, variant);
        require_positive(f.lambda_next, node);

        // Level n sits at t~ = x~ = y~ = 0, where lambda = 1 and gamma = theta = 0.
        const Jet2D base = ade2d_forward(jet, f.s1, 1.0, 0.0, 0.0);
        const double tau_t = tau / f.lambda_next;
        Jet2D next{};
        next.u = base.u - tau_t * (p.alpha * base.ux + p.beta * base.uy);
        if (variant == Ade2dVariant::Sym1) {
            // u~_xx vanishes by the normalization; u~_yy survives.
            next.u += tau_t * p.nu * base.uyy;
        }
        return ade2d_inverse(next, f.s1, f.lambda_next, f.gamma_next, f.theta_next).u;
    });
}

namespace {

struct ProbeSetup {
    Grid1D grid;
    PdeParams params;
    double t = 0.0;
    double tau = 0.0;
    ExactSolution1D exact;
};

ProbeSetup probe_setup(Pde pde)
{
    ProbeSetup s;
    if (pde == Pde::Ibe) {
        s.grid = Grid1D::over(-3.0, 3.0, 31);
        s.t = 0.25;
        s.tau = 1e-3;
        const double sigma = s.params.sigma;
        s.exact = [sigma](double t, double x) { return ibe_exact(t, x, sigma); };
    } else if (pde == Pde::Vbe) {
        s.grid = Grid1D::over(0.0, 2.0 * std::numbers::pi, 101);
        s.params.nu = 1.0 / 12.0;
        s.t = 0.1;
        s.tau = 1e-4;
        const double nu = s.params.nu;
        s.exact = [nu](double t, double x) { return vbe_exact(t, x, nu); };
    } else {
        throw Error(ErrorCode::InvalidArgument,
                    "invariantize_check covers the inviscid and viscous Burgers equations");
    }
    return s;
}

Field1D burgers_step(Pde pde, Scheme scheme, std::span<const double> u, const StepContext1D& ctx)
{
    const bool ibe = pde == Pde::Ibe;
    switch (scheme) {
    case Scheme::Ftcs: return ibe ? ftcs_step_ibe(u, ctx) : ftcs_step_vbe(u, ctx);
    case Scheme::Comp: return ibe ? comp_step_ibe(u, ctx) : comp_step_vbe(u, ctx);
    case Scheme::Sym: return ibe ? sym_step_ibe(u, ctx) : sym_step_vbe(u, ctx);
    default: break;
    }
    throw Error(ErrorCode::InvalidArgument,
                "scheme " + std::string(to_string(scheme)) + " is not a 1D scheme");
}

} // namespace

double invariantize_check(Pde pde, Scheme scheme, GroupAction action, double parameter)
{
    const ProbeSetup s = probe_setup(pde);

    Field1D data(s.grid.n);
    for (std::size_t i = 0; i < s.grid.n; ++i) {
        data[i] = s.exact(s.t, s.grid.x(i));
    }
    StepContext1D ctx{s.grid, s.params, s.tau, s.t, s.exact};
    const Field1D stepped = burgers_step(pde, scheme, data, ctx);

    // g . data and the context it lives in; `act` maps stepped values.
    StepContext1D moved = ctx;
    Field1D moved_data = data;
    Field1D expected = stepped;
    switch (action) {
    case GroupAction::Identity: break;
    case GroupAction::VbeGalilean: {
        const double c = parameter;
        moved.grid.x0 += c * s.t;
        moved.mesh_velocity = c;
        moved.boundary = galilean_exact(s.exact, c);
        moved_data = galilean_transform_field(data, c);
        expected = galilean_transform_field(stepped, c);
        break;
    }
    case GroupAction::IbeScaling: {
        const double k = std::exp(parameter);
        moved.grid.x0 *= k;
        moved.grid.h *= k;
        moved.t *= k * k;
        moved.tau *= k * k;
        moved.boundary = [exact = s.exact, k](double t, double x) {
            return exact(t / (k * k), x / k) / k;
        };
        for (double& v : moved_data) {
            v /= k;
        }
        for (double& v : expected) {
            v /= k;
        }
        break;
    }
    }

    const Field1D actual = burgers_step(pde, scheme, moved_data, moved);
    double deviation = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        deviation = std::max(deviation, std::abs(actual[i] - expected[i]));
    }
    return deviation;
}

} // namespace invcompact
