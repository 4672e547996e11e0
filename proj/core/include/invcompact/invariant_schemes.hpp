#pragma once

#include "invcompact/schemes.hpp"

namespace invcompact {

/// |lambda_{n+1}| (or lambda_{n+1} itself, where a fractional power follows)
/// must stay above this; otherwise the step raises FrameSingularity.
inline constexpr double kFrameSingularityTolerance = 1e-10;

/// The advection-diffusion frames divide by u.  Nodes whose magnitude is below
/// the smallest normal double raise ZeroState.
inline constexpr double kZeroStateTolerance = 2.2250738585072014e-308;

/// Normalized group parameters at one stencil point.  Translation parameters
/// are fixed by t~ = x~ (= y~) = 0 at the base point and are never stored.
struct MovingFrame {
    double s1 = 0.0;           ///< projection-group parameter
    double lambda_next = 1.0;  ///< projective factor at level n+1
    double gamma_next = 0.0;   ///< shifted x coordinate at level n+1 (advection-diffusion)
    double theta_next = 0.0;   ///< shifted y coordinate at level n+1 (2D)
};

enum class Ade2dVariant { Sym1, Sym2 };

// Frames, one per problem.  Each normalizes a different transformed quantity
// to zero at the base point.

/// u~_x = 0: s1 = -u_x, lambda = 1 - s1 tau.  Shared by both Burgers equations.
MovingFrame burgers_frame(double ux, double tau);
/// u~_xx = 0: s1 = nu u_xx / u, lambda = 1 - 2 s1 tau.
MovingFrame ade1d_frame(double u, double uxx, const PdeParams& p, double tau);
/// SYM-1: s1 = u_xx / (2u).  SYM-2: s1 = (u_xx + u_yy) / (4u).
/// lambda = 1 - 4 nu s1 tau, gamma = -alpha tau, theta = -beta tau.
MovingFrame ade2d_frame(double u, double uxx, double uyy, const PdeParams& p,
                        double tau, Ade2dVariant variant);

/// Point value and derivatives of u up to second order in x and y.
struct Jet2D {
    double u = 0.0;
    double ux = 0.0;
    double uy = 0.0;
    double uxx = 0.0;
    double uyy = 0.0;
};

/// Prolonged action of the projection group of the 2D advection-diffusion
/// equation at a point with projective factor lambda and shifted coordinates
/// (gamma, theta).
Jet2D ade2d_forward(const Jet2D& jet, double s1, double lambda, double gamma, double theta);
/// Exact inverse of ade2d_forward.
Jet2D ade2d_inverse(const Jet2D& transformed, double s1, double lambda, double gamma,
                    double theta);

/// u^{n+1} = (u + tau^2 u^2 u_xx / (2 lambda^2)) / lambda
Field1D sym_step_ibe(std::span<const double> u, const StepContext1D& ctx);

/// u^{n+1} = lambda^{-3/2} (lambda u - tau alpha u_x) exp(s1 alpha^2 tau^2 / (2 nu lambda))
/// with the exponent evaluated as (u_xx / u) alpha^2 tau^2 / (2 lambda).
Field1D sym_step_ade1d(std::span<const double> u, const StepContext1D& ctx);

/// u^{n+1} = (u - s1 (x^{n+1} - x^n) + tau nu u_xx / lambda) / lambda, where the
/// node displacement comes from ctx.mesh_velocity.
Field1D sym_step_vbe(std::span<const double> u, const StepContext1D& ctx);

/// Steps in the frame-transformed variables and maps back with
/// ade2d_inverse at level n+1.
Field2D sym_step_ade2d(const Field2D& u, const StepContext2D& ctx, Ade2dVariant variant);

/// Group actions exercised by invariantize_check.
enum class GroupAction {
    Identity,
    VbeGalilean,  ///< (t, x, u) -> (t, x + c t, u + c), c = parameter
    IbeScaling,   ///< (t, x, u) -> (e^{2s} t, e^s x, e^{-s} u), s = parameter
};

/// Largest |step(g . data) - g . step(data)| over one step on exact-solution
/// data: inviscid Burgers on [-3, 3] (31 nodes, t = 0.25, tau = 1e-3) or
/// viscous Burgers on [0, 2 pi] (101 nodes, nu = 1/12, t = 0.1, tau = 1e-4).
/// Invariant schemes give rounding-level values; base schemes do not.
double invariantize_check(Pde pde, Scheme scheme, GroupAction action, double parameter);

} // namespace invcompact
