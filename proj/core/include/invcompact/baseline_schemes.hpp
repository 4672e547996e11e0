#pragma once

#include "invcompact/schemes.hpp"

namespace invcompact {

// Forward Euler with second-order central differences.  Interior nodes are
// updated, the two (or four) boundaries are overwritten from ctx.boundary at
// t + tau, and Error{NonFinite} is raised if any value blows up.
Field1D ftcs_step_ibe(std::span<const double> u, const StepContext1D& ctx);
Field1D ftcs_step_ade1d(std::span<const double> u, const StepContext1D& ctx);
Field1D ftcs_step_vbe(std::span<const double> u, const StepContext1D& ctx);
Field2D ftcs_step_ade2d(const Field2D& u, const StepContext2D& ctx);

/// Inviscid Burgers with defect correction:
///   u^{n+1} = u - tau u u_x - tau d_c,  d_c = -(tau/2) (u^2 u_xx + 2 u u_x^2).
Field1D comp_step_ibe(std::span<const double> u, const StepContext1D& ctx);

/// u^{n+1} = u - tau (alpha u_x - nu u_xx)
Field1D comp_step_ade1d(std::span<const double> u, const StepContext1D& ctx);

/// u^{n+1} = u - tau (u u_x - nu u_xx)
Field1D comp_step_vbe(std::span<const double> u, const StepContext1D& ctx);

/// Unsplit: u^{n+1} = u - tau (alpha u_x + beta u_y - nu (u_xx + u_yy))
Field2D comp_step_ade2d(const Field2D& u, const StepContext2D& ctx);

} // namespace invcompact
