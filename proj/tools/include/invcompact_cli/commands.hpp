#pragma once

#include "invcompact_cli/config.hpp"

#include <ostream>

namespace invcompact::cli {

/// Number of worker threads: the THREADS environment variable if it holds a
/// positive integer, otherwise the hardware concurrency.
unsigned thread_budget();

/// Writes the final profile (x[,y],u_numeric,u_exact,error) to the output
/// path (default "<pde>_<scheme>_profile.csv") and prints the summary row
/// scheme,pde,n,h,tau,t_final,rmse,linf,wall_time to `out`.
void cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Rows scheme,n,h,linf,slope for every scheme and size.  Needs three or
/// more sizes.  Written to the output path if set, otherwise to `out`.
void cmd_converge(const RunConfig& config, std::ostream& out, std::ostream& err,
                  unsigned threads);

/// Rows c,scheme,rmse,linf for the viscous Burgers equation.
void cmd_galilean(const RunConfig& config, std::ostream& out, std::ostream& err,
                  unsigned threads);

/// Runs the built-in example checks, one pass/fail line each.  Returns the
/// number of failures.
int cmd_selftest(std::ostream& out);

/// Entry point shared by the binary and the tests.  Returns the exit code.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace invcompact::cli
