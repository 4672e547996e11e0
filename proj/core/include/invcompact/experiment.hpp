#pragma once

#include "invcompact/metrics.hpp"

#include <array>
#include <optional>

namespace invcompact {

/// Everything needed to reproduce one run from the exact solution.
struct ExperimentSpec {
    Pde pde = Pde::Ibe;
    Scheme scheme = Scheme::Sym;
    std::array<double, 2> x_domain{-3.0, 3.0};
    std::array<double, 2> y_domain{-4.0, 4.0};  ///< ade2d only
    std::size_t nx = 31;
    std::size_t ny = 0;  ///< ade2d only; 0 means "same as nx"
    double tau = 1e-3;
    double t_final = 0.5;
    PdeParams params;
    /// Viscous Burgers only: solve the boosted problem on a mesh moving with
    /// the boosted frame and compare with the boosted exact solution.
    std::optional<double> galilean_c;

    /// Throws Error{InvalidArgument} / Error{ConfigInvalid} on bad input.
    void validate() const;
};

/// Defaults matching the published runs for each problem (domain, grid,
/// time step, final time, constants).
ExperimentSpec default_spec(Pde pde, Scheme scheme);

/// Final-time profile together with its report.  For 1D problems `y` is
/// empty; 2D values are row-major with x as the slow index.
struct ExperimentResult {
    ErrorReport report;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> numeric;
    std::vector<double> exact;
};

/// Exact solution (boosted if galilean_c is set) used for initial, boundary
/// and reference data of a 1D spec.
ExactSolution1D exact_solution_1d(const ExperimentSpec& spec);
ExactSolution2D exact_solution_2d(const ExperimentSpec& spec);

/// One explicit step of the chosen scheme.
Field1D advance(Pde pde, Scheme scheme, std::span<const double> u, const StepContext1D& ctx);
Field2D advance(Scheme scheme, const Field2D& u, const StepContext2D& ctx);

/// Initializes from the exact solution at t = 0, steps to t_final and
/// compares.  Throws StepCountMismatch unless t_final / tau is a whole number
/// to within 1e-9; scheme errors propagate.
ExperimentResult simulate(const ExperimentSpec& spec);
ErrorReport run_experiment(const ExperimentSpec& spec);

/// One run per grid size (nx = ny = n for ade2d) at base.tau and
/// base.t_final; the slope is fitted over every row.  Needs at least three sizes.
/// Cells run on up to `threads` workers.
ConvergenceTable convergence_study(const ExperimentSpec& base, std::span<const std::size_t> sizes,
                                   unsigned threads = 1);

/// Viscous Burgers runs for every (c, scheme) pair, ordered by c then scheme.
std::vector<ErrorReport> galilean_experiment(const ExperimentSpec& base,
                                             std::span<const double> c_values,
                                             std::span<const Scheme> schemes,
                                             unsigned threads = 1);

} // namespace invcompact
