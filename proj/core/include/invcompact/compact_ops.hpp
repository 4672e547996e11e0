#pragma once

#include "invcompact/grid.hpp"

#include <array>
#include <functional>

namespace invcompact {

/// How the two end rows of a compact derivative system are closed.
///
/// OneSidedThirdOrder uses the standard single-parameter third-order closures
///   f'_0  + 2 f'_1  = (-5 f_0 + 4 f_1 + f_2) / (2h)
///   f''_0 + 11 f''_1 = (13 f_0 - 27 f_1 + 15 f_2 - f_3) / h^2
/// and their mirror images.  ExactDerivative pins the end derivatives to the
/// supplied values.
struct BoundaryPolicy {
    enum class Kind { OneSidedThirdOrder, ExactDerivative };

    Kind kind = Kind::OneSidedThirdOrder;
    std::array<double, 2> end_values{0.0, 0.0};

    static BoundaryPolicy one_sided() noexcept { return {}; }
    static BoundaryPolicy exact(double left, double right) noexcept {
        return {Kind::ExactDerivative, {left, right}};
    }
};

/// Selects the closure for each grid line of a 2D operator; the argument is
/// the index of the line (y index for x-lines, x index for y-lines).
using LineBoundary = std::function<BoundaryPolicy(std::size_t line)>;

/// Fourth-order compact first derivative,
///   (1/6) f'_{i-1} + (2/3) f'_i + (1/6) f'_{i+1} = (f_{i+1} - f_{i-1}) / (2h).
Field1D compact_dx(std::span<const double> u, const Grid1D& grid,
                   const BoundaryPolicy& bp = BoundaryPolicy::one_sided());

/// Fourth-order compact second derivative,
///   (1/12) f''_{i-1} + (5/6) f''_i + (1/12) f''_{i+1} = (f_{i+1} - 2 f_i + f_{i-1}) / h^2.
Field1D compact_dxx(std::span<const double> u, const Grid1D& grid,
                    const BoundaryPolicy& bp = BoundaryPolicy::one_sided());

// Axis-wise application of the 1D operators.  An empty LineBoundary means
// OneSidedThirdOrder on every line.
Field2D compact_dx_along_x(const Field2D& u, const Grid2D& grid, const LineBoundary& bp = {});
Field2D compact_dx_along_y(const Field2D& u, const Grid2D& grid, const LineBoundary& bp = {});
Field2D compact_dxx_along_x(const Field2D& u, const Grid2D& grid, const LineBoundary& bp = {});
Field2D compact_dxx_along_y(const Field2D& u, const Grid2D& grid, const LineBoundary& bp = {});

} // namespace invcompact
