#include "invcompact/analytic.hpp"

#include "invcompact/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace invcompact {

namespace {

constexpr double kImplicitTolerance = 1e-13;
constexpr int kImplicitMaxIterations = 200;

} // namespace

void PdeParams::validate() const
{
    if (!(nu >= 0.0) || !std::isfinite(nu)) {
        throw Error(ErrorCode::InvalidArgument, "nu must be finite and >= 0");
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw Error(ErrorCode::InvalidArgument, "sigma must be finite and > 0");
    }
    if (!(L > 0.0) || !std::isfinite(L)) {
        throw Error(ErrorCode::InvalidArgument, "L must be finite and > 0");
    }
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw Error(ErrorCode::InvalidArgument, "alpha and beta must be finite");
    }
}

double ibe_initial_profile(double x, double sigma)
{
    const double s2 = sigma * sigma;
    return std::exp(-x * x / (2.0 * s2)) / std::sqrt(2.0 * std::numbers::pi * s2);
}

double ibe_breaking_time(double sigma)
{
    // min f' = f'(sigma) = -f(sigma) / sigma
    return std::sqrt(2.0 * std::numbers::pi) * sigma * sigma * std::exp(0.5);
}

double ibe_exact(double t, double x, double sigma)
{
    if (!(sigma > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "sigma must be > 0");
    }
    const double t_break = ibe_breaking_time(sigma);
    if (!(std::abs(t) < t_break)) {
        throw Error(ErrorCode::PostBreakingTime,
                    "t = " + std::to_string(t) + " is not before the breaking time " +
                        std::to_string(t_break));
    }
    const auto residual = [&](double u) { return u - ibe_initial_profile(x - u * t, sigma); };

    // Plain fixed-point sweeps contract at rate |t| max|f'| < 1 before
    // breaking; abandon them for bisection once the residual stops shrinking.
    double u = ibe_initial_profile(x, sigma);
    double r = residual(u);
    int iterations = 0;
    while (std::abs(r) > kImplicitTolerance && iterations < kImplicitMaxIterations / 2) {
        const double next = ibe_initial_profile(x - u * t, sigma);
        const double r_next = residual(next);
        ++iterations;
        if (!(std::abs(r_next) < std::abs(r))) {
            break;
        }
        u = next;
        r = r_next;
    }

    if (std::abs(r) > kImplicitTolerance) {
        double lo = 0.0;
        double hi = ibe_initial_profile(0.0, sigma);
        while (iterations < kImplicitMaxIterations) {
            u = 0.5 * (lo + hi);
            r = residual(u);
            ++iterations;
            if (std::abs(r) <= kImplicitTolerance) {
                break;
            }
            (r < 0.0 ? lo : hi) = u;
        }
    }
    if (!(std::abs(r) <= kImplicitTolerance)) {
        throw Error(ErrorCode::NoConvergence, "implicit Burgers solve did not converge at x = " +
                                                  std::to_string(x) + ", t = " + std::to_string(t));
    }
    return u;
}

double ade1d_exact(double t, double x, const PdeParams& p)
{
    const double spread = p.L * p.L + p.nu * t;
    if (!(spread > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "L^2 + nu t must be positive");
    }
    const double d = x - p.alpha * t;
    return std::exp(-d * d / (4.0 * spread)) / std::sqrt(4.0 * std::numbers::pi * spread);
}

double vbe_exact(double t, double x, double nu)
{
    if (!(t > -1.0) || !(nu > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "viscous Burgers solution needs t > -1, nu > 0");
    }
    const double a = 4.0 * nu * (t + 1.0);
    const double d1 = x - 4.0 * t;
    const double d2 = d1 - 2.0 * std::numbers::pi;
    const double e1 = -d1 * d1 / a;
    const double e2 = -d2 * d2 / a;
    const double m = std::max(e1, e2);
    const double w1 = std::exp(e1 - m);
    const double w2 = std::exp(e2 - m);
    // phi_x / phi as a weighted mean of the two Gaussian log-derivatives.
    const double log_derivative = (w1 * (-2.0 * d1 / a) + w2 * (-2.0 * d2 / a)) / (w1 + w2);
    return 4.0 - 2.0 * nu * log_derivative;
}

double ade2d_exact(double t, double x, double y, const PdeParams& p)
{
    const double spread = p.L * p.L + p.nu * t;
    if (!(spread > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "L^2 + nu t must be positive");
    }
    const double dx = x - p.alpha * t;
    const double dy = y - p.beta * t;
    return std::exp(-(dx * dx + dy * dy) / (4.0 * spread)) / (4.0 * std::numbers::pi * spread);
}

Field1D galilean_transform_field(std::span<const double> u, double c)
{
    Field1D out(u.begin(), u.end());
    for (double& v : out) {
        v += c;
    }
    return out;
}

ExactSolution1D galilean_exact(ExactSolution1D base, double c)
{
    return [base = std::move(base), c](double t, double x) { return base(t, x - c * t) + c; };
}

} // namespace invcompact
