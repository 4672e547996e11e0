#pragma once

#include "invcompact/schemes.hpp"

namespace invcompact::detail {

/// Runs `rule(i)` on every interior node, then fills the Dirichlet ends and
/// rejects non-finite output.
template <typename Rule>
Field1D update_interior(std::span<const double> u, const StepContext1D& ctx, Rule&& rule)
{
    Field1D next(u.size());
    for (std::size_t i = 1; i + 1 < u.size(); ++i) {
        next[i] = rule(i);
    }
    apply_dirichlet(next, ctx);
    require_finite(next);
    return next;
}

template <typename Rule>
Field2D update_interior(const Field2D& u, const StepContext2D& ctx, Rule&& rule)
{
    Field2D next(u.nx(), u.ny());
    for (std::size_t i = 1; i + 1 < u.nx(); ++i) {
        for (std::size_t j = 1; j + 1 < u.ny(); ++j) {
            next(i, j) = rule(i, j);
        }
    }
    apply_dirichlet(next, ctx);
    require_finite(next.values());
    return next;
}

} // namespace invcompact::detail
