#pragma once

#include "invcompact/grid.hpp"

#include <functional>

namespace invcompact {

/// Physical constants shared by the four model problems.  Each problem reads
/// only the members it needs.
struct PdeParams {
    double alpha = 1.0;      ///< advection speed along x
    double beta = 1.0;       ///< advection speed along y (2D only)
    double nu = 1.0 / 60.0;  ///< diffusion coefficient / viscosity
    double sigma = 0.5;      ///< width of the inviscid Burgers Gaussian
    double L = 0.4;          ///< kernel width of the advection-diffusion solutions

    /// Throws Error{InvalidArgument} unless nu >= 0, sigma > 0 and L > 0.
    void validate() const;
};

using ExactSolution1D = std::function<double(double t, double x)>;
using ExactSolution2D = std::function<double(double t, double x, double y)>;

/// Gaussian profile f(x) = exp(-x^2 / (2 sigma^2)) / sqrt(2 pi sigma^2).
double ibe_initial_profile(double x, double sigma);

/// First time at which characteristics of u_t + u u_x = 0 cross for the
/// Gaussian initial profile: -1 / min f' with the minimum at x = sigma.
double ibe_breaking_time(double sigma);

/// Inviscid Burgers solution u = f(x - u t), solved for u.
///
/// Damped fixed-point iteration with a bisection fallback on [0, max f].
/// Throws PostBreakingTime for t >= ibe_breaking_time(sigma) and
/// NoConvergence if |u - f(x - u t)| > 1e-13 after 200 iterations.
double ibe_exact(double t, double x, double sigma);

/// Translating, spreading Gaussian solving u_t + alpha u_x = nu u_xx.
double ade1d_exact(double t, double x, const PdeParams& p);

/// Viscous Burgers sawtooth solution from the Cole-Hopf potential
///   phi = exp(-(x-4t)^2 / (4 nu (t+1))) + exp(-(x-4t-2 pi)^2 / (4 nu (t+1))),
///   u   = 4 - 2 nu phi_x / phi.
/// phi_x / phi is evaluated as a softmax-weighted sum so small nu does not
/// underflow both exponentials.
double vbe_exact(double t, double x, double nu);

/// 2D heat kernel advected with (alpha, beta),
///   u = exp(-((x - alpha t)^2 + (y - beta t)^2) / (4 (L^2 + nu t))) / (4 pi (L^2 + nu t)).
double ade2d_exact(double t, double x, double y, const PdeParams& p);

/// Galilean boost (t, x, u) -> (t, x + c t, u + c) applied to node values that
/// travel with the boosted frame.
Field1D galilean_transform_field(std::span<const double> u, double c);

/// Boosted exact solution: (t, x) -> base(t, x - c t) + c.
ExactSolution1D galilean_exact(ExactSolution1D base, double c);

} // namespace invcompact
