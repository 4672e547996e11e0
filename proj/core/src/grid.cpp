#include "invcompact/grid.hpp"

#include "invcompact/error.hpp"

#include <cmath>
#include <string>

namespace invcompact {

namespace {

Grid1D make_axis(double lo, double hi, std::size_t n, const char* axis)
{
    if (n < 2 || !(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string("axis ") + axis + " needs finite lo < hi and n >= 2");
    }
    return {lo, (hi - lo) / static_cast<double>(n - 1), n};
}

void check_axis(double h, std::size_t n, const char* what)
{
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + ": spacing must be positive");
    }
    if (n < 5) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string(what) + ": at least 5 nodes required, got " + std::to_string(n));
    }
}

} // namespace

Grid1D Grid1D::over(double lo, double hi, std::size_t n)
{
    return make_axis(lo, hi, n, "x");
}

std::vector<double> Grid1D::nodes() const
{
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = x(i);
    }
    return out;
}

void Grid1D::validate() const
{
    check_axis(h, n, "Grid1D");
}

Grid2D Grid2D::over(double xlo, double xhi, std::size_t nx, double ylo, double yhi,
                    std::size_t ny)
{
    const Grid1D gx = make_axis(xlo, xhi, nx, "x");
    const Grid1D gy = make_axis(ylo, yhi, ny, "y");
    return {gx.x0, gy.x0, gx.h, gy.h, nx, ny};
}

void Grid2D::validate() const
{
    check_axis(hx, nx, "Grid2D x");
    check_axis(hy, ny, "Grid2D y");
}

} // namespace invcompact
