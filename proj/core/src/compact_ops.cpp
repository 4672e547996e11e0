#include "invcompact/compact_ops.hpp"

#include "invcompact/error.hpp"
#include "invcompact/tridiag.hpp"

#include <string>

namespace invcompact {

namespace {

enum class Order { First, Second };

void check_line(std::span<const double> u, const Grid1D& grid)
{
    grid.validate();
    if (u.size() != grid.n) {
        throw Error(ErrorCode::ShapeMismatch, "field has " + std::to_string(u.size()) +
                                                  " values but grid has " +
                                                  std::to_string(grid.n) + " nodes");
    }
}

TriDiagSystem assemble(std::span<const double> u, double h, const BoundaryPolicy& bp, Order order)
{
    const std::size_t n = u.size();
    TriDiagSystem sys;
    const bool first = order == Order::First;
    const double off = first ? 1.0 / 6.0 : 1.0 / 12.0;
    const double mid = first ? 2.0 / 3.0 : 5.0 / 6.0;
    sys.lower.assign(n - 1, off);
    sys.upper.assign(n - 1, off);
    sys.diag.assign(n, mid);
    sys.rhs.resize(n);

    if (first) {
        const double inv_2h = 1.0 / (2.0 * h);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            sys.rhs[i] = (u[i + 1] - u[i - 1]) * inv_2h;
        }
    } else {
        const double inv_h2 = 1.0 / (h * h);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            sys.rhs[i] = (u[i + 1] - 2.0 * u[i] + u[i - 1]) * inv_h2;
        }
    }

    const std::size_t last = n - 1;
    sys.diag[0] = 1.0;
    sys.diag[last] = 1.0;
    if (bp.kind == BoundaryPolicy::Kind::ExactDerivative) {
        sys.upper[0] = 0.0;
        sys.lower[last - 1] = 0.0;
        sys.rhs[0] = bp.end_values[0];
        sys.rhs[last] = bp.end_values[1];
    } else if (first) {
        sys.upper[0] = 2.0;
        sys.lower[last - 1] = 2.0;
        sys.rhs[0] = (-5.0 * u[0] + 4.0 * u[1] + u[2]) / (2.0 * h);
        sys.rhs[last] = (5.0 * u[last] - 4.0 * u[last - 1] - u[last - 2]) / (2.0 * h);
    } else {
        sys.upper[0] = 11.0;
        sys.lower[last - 1] = 11.0;
        sys.rhs[0] = (13.0 * u[0] - 27.0 * u[1] + 15.0 * u[2] - u[3]) / (h * h);
        sys.rhs[last] =
            (13.0 * u[last] - 27.0 * u[last - 1] + 15.0 * u[last - 2] - u[last - 3]) / (h * h);
    }
    return sys;
}

Field1D apply(std::span<const double> u, const Grid1D& grid, const BoundaryPolicy& bp, Order order)
{
    check_line(u, grid);
    return solve_tridiagonal(assemble(u, grid.h, bp, order));
}

enum class Axis { X, Y };

Field2D apply_axis(const Field2D& u, const Grid2D& grid, const LineBoundary& bp, Order order,
                   Axis axis)
{
    grid.validate();
    if (!u.matches(grid)) {
        throw Error(ErrorCode::ShapeMismatch, "2D field shape " + std::to_string(u.nx()) + "x" +
                                                  std::to_string(u.ny()) +
                                                  " does not match grid " +
                                                  std::to_string(grid.nx) + "x" +
                                                  std::to_string(grid.ny));
    }
    const bool along_x = axis == Axis::X;
    const Grid1D line_grid = along_x ? grid.x_axis() : grid.y_axis();
    const std::size_t lines = along_x ? grid.ny : grid.nx;
    const std::size_t len = line_grid.n;

    Field2D out(u.nx(), u.ny());
    std::vector<double> line(len);
    for (std::size_t k = 0; k < lines; ++k) {
        for (std::size_t m = 0; m < len; ++m) {
            line[m] = along_x ? u(m, k) : u(k, m);
        }
        const BoundaryPolicy policy = bp ? bp(k) : BoundaryPolicy::one_sided();
        const Field1D d = solve_tridiagonal(assemble(line, line_grid.h, policy, order));
        for (std::size_t m = 0; m < len; ++m) {
            (along_x ? out(m, k) : out(k, m)) = d[m];
        }
    }
    return out;
}

} // namespace

Field1D compact_dx(std::span<const double> u, const Grid1D& grid, const BoundaryPolicy& bp)
{
    return apply(u, grid, bp, Order::First);
}

Field1D compact_dxx(std::span<const double> u, const Grid1D& grid, const BoundaryPolicy& bp)
{
    return apply(u, grid, bp, Order::Second);
}

Field2D compact_dx_along_x(const Field2D& u, const Grid2D& grid, const LineBoundary& bp)
{
    return apply_axis(u, grid, bp, Order::First, Axis::X);
}

Field2D compact_dx_along_y(const Field2D& u, const Grid2D& grid, const LineBoundary& bp)
{
    return apply_axis(u, grid, bp, Order::First, Axis::Y);
}

Field2D compact_dxx_along_x(const Field2D& u, const Grid2D& grid, const LineBoundary& bp)
{
    return apply_axis(u, grid, bp, Order::Second, Axis::X);
}

Field2D compact_dxx_along_y(const Field2D& u, const Grid2D& grid, const LineBoundary& bp)
{
    return apply_axis(u, grid, bp, Order::Second, Axis::Y);
}

} // namespace invcompact
