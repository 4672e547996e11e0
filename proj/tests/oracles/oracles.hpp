#pragma once

// Reference computations used to check the library.  None of these call into
// invcompact; each is the most direct textbook method for its job.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

/// Gaussian elimination with partial pivoting on a dense copy.
inline std::vector<double> dense_solve(Matrix a, std::vector<double> b)
{
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (std::abs(a[r][k]) > std::abs(a[piv][k])) {
                piv = r;
            }
        }
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        if (a[k][k] == 0.0) {
            throw std::runtime_error("singular matrix");
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const double m = a[r][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) {
                a[r][c] -= m * a[k][c];
            }
            b[r] -= m * b[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t k = n; k-- > 0;) {
        double s = b[k];
        for (std::size_t c = k + 1; c < n; ++c) {
            s -= a[k][c] * x[c];
        }
        x[k] = s / a[k][k];
    }
    return x;
}

/// Dense matrix of a tridiagonal system given by its three bands.
inline Matrix dense_from_bands(const std::vector<double>& lower, const std::vector<double>& diag,
                               const std::vector<double>& upper)
{
    const std::size_t n = diag.size();
    Matrix a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = diag[i];
        if (i > 0) {
            a[i][i - 1] = lower[i - 1];
        }
        if (i + 1 < n) {
            a[i][i + 1] = upper[i];
        }
    }
    return a;
}

inline std::vector<double> multiply(const Matrix& a, const std::vector<double>& x)
{
    std::vector<double> y(a.size(), 0.0);
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < x.size(); ++c) {
            y[r] += a[r][c] * x[c];
        }
    }
    return y;
}

/// Root of f on [a, b]; requires a sign change.
inline double bisect(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-15)
{
    double fa = f(a);
    if (fa * f(b) > 0.0) {
        throw std::runtime_error("no sign change on bracket");
    }
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

/// Composite trapezoid rule with n nodes.
inline double trapezoid(const std::function<double(double)>& f, double a, double b, std::size_t n)
{
    const double h = (b - a) / static_cast<double>(n - 1);
    double s = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i + 1 < n; ++i) {
        s += f(a + static_cast<double>(i) * h);
    }
    return s * h;
}

/// Fourth-order central differences of a scalar function.
inline double d1(const std::function<double(double)>& f, double x, double h)
{
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

inline double d2(const std::function<double(double)>& f, double x, double h)
{
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) /
           (12 * h * h);
}

/// Least-squares slope of log(e) on log(h) via centred sums.
inline double log_slope(const std::vector<double>& h, const std::vector<double>& e)
{
    const std::size_t n = h.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(h[i]);
        my += std::log(e[i]);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(h[i]) - mx;
        num += dx * (std::log(e[i]) - my);
        den += dx * dx;
    }
    return num / den;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b,
                           std::size_t lo = 0, std::size_t trim = 0)
{
    double m = 0.0;
    for (std::size_t i = lo; i + trim < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

} // namespace oracle
