#pragma once

#include "invcompact/schemes.hpp"

#include <span>
#include <vector>

namespace invcompact {

/// sqrt(sum (a - b)^2 / N) over all nodes.  Throws ShapeMismatch.
double rmse(std::span<const double> numeric, std::span<const double> exact);
/// max |a - b| over all nodes.  Throws ShapeMismatch.
double linf(std::span<const double> numeric, std::span<const double> exact);

/// Outcome of one experiment.  Errors include boundary nodes, which carry
/// exact values and so contribute zeros.
struct ErrorReport {
    Pde pde = Pde::Ibe;
    Scheme scheme = Scheme::Ftcs;
    std::size_t nx = 0;
    std::size_t ny = 0;  ///< 0 for 1D problems
    double h = 0.0;      ///< x spacing
    double tau = 0.0;
    double t_final = 0.0;
    double galilean_c = 0.0;
    double rmse = 0.0;
    double linf = 0.0;
    double wall_time = 0.0;  ///< seconds
    std::vector<std::string> warnings;
};

struct ConvergenceRow {
    std::size_t n = 0;
    double h = 0.0;
    double linf = 0.0;
};

struct ConvergenceTable {
    Pde pde = Pde::Ibe;
    Scheme scheme = Scheme::Ftcs;
    std::vector<ConvergenceRow> rows;  ///< sorted by increasing n
    double slope = 0.0;                ///< d log(linf) / d log(h)
};

/// Ordinary least-squares slope of log(err) against log(h).  Needs at least
/// two points with positive h and err.
double fit_log_slope(std::span<const double> h, std::span<const double> err);

} // namespace invcompact
