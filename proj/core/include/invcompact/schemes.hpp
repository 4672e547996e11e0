#pragma once

#include "invcompact/analytic.hpp"
#include "invcompact/grid.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invcompact {

enum class Pde { Ibe, Ade1d, Vbe, Ade2d };

/// Sym is the invariant scheme of a 1D problem; Sym1/Sym2 are the two
/// moving-frame choices for the 2D advection-diffusion problem.
enum class Scheme { Ftcs, Comp, Sym, Sym1, Sym2 };

std::string_view to_string(Pde pde) noexcept;
std::string_view to_string(Scheme scheme) noexcept;
std::optional<Pde> parse_pde(std::string_view name) noexcept;
std::optional<Scheme> parse_scheme(std::string_view name) noexcept;

bool is_two_dimensional(Pde pde) noexcept;
/// ftcs/comp run everywhere, sym on the 1D problems, sym1/sym2 on ade2d only.
bool scheme_supports(Pde pde, Scheme scheme) noexcept;

/// State shared by a single explicit step on a 1D grid.
struct StepContext1D {
    Grid1D grid;          ///< node positions at time t
    PdeParams params;
    double tau = 0.0;
    double t = 0.0;
    ExactSolution1D boundary;  ///< Dirichlet data sampled at t + tau
    /// Velocity of every mesh node, so that x^{n+1} - x^n = mesh_velocity * tau.
    /// Only the invariant viscous Burgers scheme accounts for it; the base
    /// schemes treat the mesh as fixed.
    double mesh_velocity = 0.0;
};

struct StepContext2D {
    Grid2D grid;
    PdeParams params;
    double tau = 0.0;
    double t = 0.0;
    ExactSolution2D boundary;
};

/// Non-fatal sanity checks nu tau / h^2 <= 1/2 and |alpha| tau / h <= 1 (and
/// the y-direction analogues in 2D).  Returns one message per violated bound.
std::vector<std::string> stability_warnings(Pde pde, const StepContext1D& ctx);
std::vector<std::string> stability_warnings(const StepContext2D& ctx);

namespace detail {
// Shared by both scheme families.
void require_matching(std::span<const double> u, const StepContext1D& ctx);
void require_matching(const Field2D& u, const StepContext2D& ctx);
void apply_dirichlet(Field1D& u, const StepContext1D& ctx);
void apply_dirichlet(Field2D& u, const StepContext2D& ctx);
void require_finite(std::span<const double> u);
} // namespace detail

} // namespace invcompact
