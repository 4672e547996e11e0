#pragma once

#include <vector>

namespace invcompact {

/// Tridiagonal system A x = rhs.
///
/// lower[i] is A(i+1, i) and upper[i] is A(i, i+1), so both bands hold n-1
/// entries while diag and rhs hold n.
struct TriDiagSystem {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;
    std::vector<double> rhs;

    std::size_t size() const noexcept { return diag.size(); }
};

/// Pivots smaller than this in magnitude abort the elimination.
inline constexpr double kZeroPivotTolerance = 1e-14;

/// Thomas elimination without pivoting.
///
/// Throws Error{ShapeMismatch} on inconsistent band lengths or n < 2, and
/// Error{ZeroPivot} (with the row index) when a pivot falls below
/// kZeroPivotTolerance.
std::vector<double> solve_tridiagonal(const TriDiagSystem& sys);

} // namespace invcompact
