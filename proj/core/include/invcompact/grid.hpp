#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace invcompact {

/// Uniform 1D mesh: nodes x0, x0 + h, ..., x0 + (n-1) h.
struct Grid1D {
    double x0 = 0.0;
    double h = 1.0;
    std::size_t n = 0;

    /// Grid with n nodes spanning [lo, hi] inclusive.
    static Grid1D over(double lo, double hi, std::size_t n);

    double x(std::size_t i) const noexcept { return x0 + static_cast<double>(i) * h; }
    double x_last() const noexcept { return x(n - 1); }
    std::vector<double> nodes() const;

    /// Throws Error{InvalidArgument} unless h > 0 and n >= 5.
    void validate() const;
};

struct Grid2D {
    double x0 = 0.0;
    double y0 = 0.0;
    double hx = 1.0;
    double hy = 1.0;
    std::size_t nx = 0;
    std::size_t ny = 0;

    static Grid2D over(double xlo, double xhi, std::size_t nx,
                       double ylo, double yhi, std::size_t ny);

    double x(std::size_t i) const noexcept { return x0 + static_cast<double>(i) * hx; }
    double y(std::size_t j) const noexcept { return y0 + static_cast<double>(j) * hy; }
    Grid1D x_axis() const noexcept { return {x0, hx, nx}; }
    Grid1D y_axis() const noexcept { return {y0, hy, ny}; }

    void validate() const;
};

using Field1D = std::vector<double>;

/// Node values on a Grid2D, row-major with x as the slow index:
/// value(i, j) lives at data()[i * ny + j].
class Field2D {
public:
    Field2D() = default;
    Field2D(std::size_t nx, std::size_t ny, double fill = 0.0)
        : nx_(nx), ny_(ny), values_(nx * ny, fill) {}

    std::size_t nx() const noexcept { return nx_; }
    std::size_t ny() const noexcept { return ny_; }
    std::size_t size() const noexcept { return values_.size(); }

    double& operator()(std::size_t i, std::size_t j) noexcept { return values_[i * ny_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * ny_ + j]; }

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

    bool matches(const Grid2D& g) const noexcept { return nx_ == g.nx && ny_ == g.ny; }

private:
    std::size_t nx_ = 0;
    std::size_t ny_ = 0;
    std::vector<double> values_;
};

} // namespace invcompact
