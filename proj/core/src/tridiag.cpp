#include "invcompact/tridiag.hpp"

#include "invcompact/error.hpp"

#include <cmath>
#include <string>

namespace invcompact {

std::vector<double> solve_tridiagonal(const TriDiagSystem& sys)
{
    const std::size_t n = sys.diag.size();
    if (n < 2) {
        throw Error(ErrorCode::ShapeMismatch, "tridiagonal system needs n >= 2");
    }
    if (sys.lower.size() != n - 1 || sys.upper.size() != n - 1 || sys.rhs.size() != n) {
        throw Error(ErrorCode::ShapeMismatch,
                    "band lengths must be (n-1, n, n-1) with rhs of length n, n = " +
                        std::to_string(n));
    }

    std::vector<double> c_prime(n - 1);
    std::vector<double> x(n);

    double pivot = sys.diag[0];
    if (std::abs(pivot) < kZeroPivotTolerance) {
        throw Error(ErrorCode::ZeroPivot, "zero pivot in row 0", 0);
    }
    c_prime[0] = sys.upper[0] / pivot;
    x[0] = sys.rhs[0] / pivot;

    for (std::size_t i = 1; i < n; ++i) {
        pivot = sys.diag[i] - sys.lower[i - 1] * c_prime[i - 1];
        if (!(std::abs(pivot) >= kZeroPivotTolerance)) {
            throw Error(ErrorCode::ZeroPivot, "zero pivot in row " + std::to_string(i), i);
        }
        if (i < n - 1) {
            c_prime[i] = sys.upper[i] / pivot;
        }
        x[i] = (sys.rhs[i] - sys.lower[i - 1] * x[i - 1]) / pivot;
    }

    for (std::size_t i = n - 1; i-- > 0;) {
        x[i] -= c_prime[i] * x[i + 1];
    }
    return x;
}

} // namespace invcompact
