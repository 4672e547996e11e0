#include "invcompact_cli/commands.hpp"

#include "invcompact/compact_ops.hpp"
#include "invcompact/error.hpp"
#include "invcompact/invariant_schemes.hpp"
#include "invcompact/baseline_schemes.hpp"
#include "invcompact/tridiag.hpp"
#include "invcompact_cli/csv.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

namespace invcompact::cli {

namespace {

std::string count_cell(std::size_t n)
{
    return std::to_string(n);
}

void report_warnings(const std::vector<std::string>& warnings, std::ostream& err)
{
    for (const auto& w : warnings) {
        err << "warning: " << w << '\n';
    }
}

/// Writes `body` to `path`, or to `fallback` when the path is empty.
void emit(const std::string& path, const std::string& body, std::ostream& fallback)
{
    if (path.empty()) {
        fallback << body;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw Error(ErrorCode::ConfigInvalid, "field 'output': cannot write '" + path + "'");
    }
    file << body;
    if (!file) {
        throw Error(ErrorCode::ConfigInvalid, "field 'output': write to '" + path + "' failed");
    }
}

ExperimentSpec with_scheme(ExperimentSpec spec, Scheme scheme)
{
    spec.scheme = scheme;
    return spec;
}

} // namespace

unsigned thread_budget()
{
    if (const char* env = std::getenv("THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const ExperimentResult result = simulate(config.spec);
    const ErrorReport& r = result.report;
    report_warnings(r.warnings, err);

    std::ostringstream profile;
    const bool two_d = !result.y.empty();
    write_row(profile, two_d ? std::vector<std::string>{"x", "y", "u_numeric", "u_exact", "error"}
                             : std::vector<std::string>{"x", "u_numeric", "u_exact", "error"});
    for (std::size_t k = 0; k < result.numeric.size(); ++k) {
        std::vector<std::string> row;
        if (two_d) {
            row.push_back(format_real(result.x[k / result.y.size()]));
            row.push_back(format_real(result.y[k % result.y.size()]));
        } else {
            row.push_back(format_real(result.x[k]));
        }
        row.push_back(format_real(result.numeric[k]));
        row.push_back(format_real(result.exact[k]));
        row.push_back(format_real(result.numeric[k] - result.exact[k]));
        write_row(profile, row);
    }
    const std::string path = config.output_path.empty()
                                 ? std::string(to_string(r.pde)) + "_" +
                                       std::string(to_string(r.scheme)) + "_profile.csv"
                                 : config.output_path;
    emit(path, profile.str(), out);

    write_row(out, {"scheme", "pde", "n", "h", "tau", "t_final", "rmse", "linf", "wall_time"});
    write_row(out, {std::string(to_string(r.scheme)), std::string(to_string(r.pde)),
                    count_cell(r.nx), format_real(r.h), format_real(r.tau),
                    format_real(r.t_final), format_real(r.rmse), format_real(r.linf),
                    format_real(r.wall_time)});
}

void cmd_converge(const RunConfig& config, std::ostream& out, std::ostream& err,
                  unsigned threads)
{
    if (config.sizes.size() < 3) {
        throw Error(ErrorCode::ConfigInvalid,
                    "field 'sizes': a convergence study needs at least three grid sizes");
    }
    std::ostringstream body;
    write_row(body, {"scheme", "n", "h", "linf", "slope"});
    for (const Scheme s : effective_schemes(config)) {
        const ConvergenceTable table =
            convergence_study(with_scheme(config.spec, s), config.sizes, threads);
        for (const auto& row : table.rows) {
            write_row(body, {std::string(to_string(s)), count_cell(row.n), format_real(row.h),
                             format_real(row.linf), format_real(table.slope)});
        }
        err << to_string(config.spec.pde) << ' ' << to_string(s) << " slope " << table.slope
            << '\n';
    }
    emit(config.output_path, body.str(), out);
}

void cmd_galilean(const RunConfig& config, std::ostream& out, std::ostream& err,
                  unsigned threads)
{
    if (config.spec.pde != Pde::Vbe) {
        throw Error(ErrorCode::ConfigInvalid, "field 'pde': the Galilean study needs pde 'vbe'");
    }
    const std::vector<double> cs =
        config.c_values.empty() ? std::vector<double>{0.0, 0.5, 1.0} : config.c_values;
    const std::vector<Scheme> schemes = effective_schemes(config);
    const auto reports = galilean_experiment(config.spec, cs, schemes, threads);
    if (!reports.empty()) {
        report_warnings(reports.front().warnings, err);
    }

    std::ostringstream body;
    write_row(body, {"c", "scheme", "rmse", "linf"});
    for (const auto& r : reports) {
        write_row(body, {format_real(r.galilean_c), std::string(to_string(r.scheme)),
                         format_real(r.rmse), format_real(r.linf)});
    }
    emit(config.output_path, body.str(), out);
}

int cmd_selftest(std::ostream& out)
{
    using Check = std::pair<std::string, std::function<bool()>>;
    const auto near = [](double a, double b, double tol) { return std::abs(a - b) <= tol; };
    const auto max_dev = [](const std::vector<double>& a, const std::vector<double>& b,
                            std::size_t lo, std::size_t hi) {
        double worst = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            worst = std::max(worst, std::abs(a[i] - b[i]));
        }
        return worst;
    };

    const std::vector<Check> checks{
        {"tridiag identity system",
         [&] {
             const TriDiagSystem sys{{0, 0, 0}, {1, 1, 1, 1}, {0, 0, 0}, {1.5, -2, 3, 4}};
             return max_dev(solve_tridiagonal(sys), sys.rhs, 0, 4) == 0.0;
         }},
        {"tridiag 3x3 against hand elimination",
         [&] {
             // [[2,1,0],[1,2,1],[0,1,2]] x = (1,2,3) has x = (1/2, 0, 3/2).
             const auto x = solve_tridiagonal({{1, 1}, {2, 2, 2}, {1, 1}, {1, 2, 3}});
             return max_dev(x, {0.5, 0.0, 1.5}, 0, 3) < 1e-14;
         }},
        {"compact_dx of a constant is zero",
         [&] {
             const Grid1D g = Grid1D::over(0.0, 1.0, 11);
             const std::vector<double> u(g.n, 3.7);
             return max_dev(compact_dx(u, g), std::vector<double>(g.n, 0.0), 0, g.n) < 1e-12;
         }},
        {"compact_dx of x is one",
         [&] {
             const Grid1D g = Grid1D::over(0.0, 1.0, 11);
             return max_dev(compact_dx(g.nodes(), g), std::vector<double>(g.n, 1.0), 0, g.n) <
                    1e-12;
         }},
        {"compact_dxx of x^2 is two",
         [&] {
             const Grid1D g = Grid1D::over(-1.0, 2.0, 13);
             std::vector<double> u(g.n);
             for (std::size_t i = 0; i < g.n; ++i) {
                 u[i] = g.x(i) * g.x(i);
             }
             const auto d = compact_dxx(u, g, BoundaryPolicy::exact(2.0, 2.0));
             return max_dev(d, std::vector<double>(g.n, 2.0), 0, g.n) < 1e-10;
         }},
        {"inviscid Burgers profile at t=0",
         [&] { return near(ibe_exact(0.0, 0.0, 0.5), 2.0 / std::sqrt(2.0 * std::numbers::pi), 1e-14); }},
        {"viscous Burgers solution at x=pi, t=0",
         [&] { return near(vbe_exact(0.0, std::numbers::pi, 1.0 / 12.0), 4.0, 1e-12); }},
        {"rmse of (3,4) on two nodes",
         [&] {
             const std::vector<double> a{3, 4}, b{0, 0};
             return near(rmse(a, b), std::sqrt(12.5), 1e-15);
         }},
        {"linf of (-5,1)",
         [&] {
             const std::vector<double> a{-5, 1}, b{0, 0};
             return linf(a, b) == 5.0;
         }},
        {"slope of a fabricated h^3 sequence",
         [&] {
             const std::vector<double> h{0.1, 0.05, 0.025, 0.0125};
             std::vector<double> e;
             for (const double v : h) {
                 e.push_back(v * v * v);
             }
             return near(fit_log_slope(h, e), 3.0, 1e-2);
         }},
        {"invariant inviscid Burgers step is exact on u = x",
         [&] {
             const Grid1D g = Grid1D::over(-1.0, 1.0, 11);
             const double tau = 1e-3;
             const StepContext1D ctx{g, {}, tau, 0.0,
                                     [](double t, double x) { return x / (1.0 + t); }};
             const auto next = sym_step_ibe(g.nodes(), ctx);
             double worst = 0.0;
             for (std::size_t i = 0; i < g.n; ++i) {
                 worst = std::max(worst, std::abs(next[i] - g.x(i) / (1.0 + tau)));
             }
             return worst <= 1e-12;
         }},
        {"zero-step run has zero error",
         [&] {
             ExperimentSpec s = default_spec(Pde::Vbe, Scheme::Sym);
             s.t_final = 0.0;
             const auto r = run_experiment(s);
             return r.rmse == 0.0 && r.linf == 0.0;
         }},
        {"sym1 on ibe is rejected",
         [&] {
             try {
                 resolve_config({{"pde", "ibe"}, {"scheme", "sym1"}});
             } catch (const Error& e) {
                 return e.code() == ErrorCode::ConfigInvalid;
             }
             return false;
         }},
        {"identity group action leaves the step unchanged",
         [&] {
             return invariantize_check(Pde::Vbe, Scheme::Sym, GroupAction::Identity, 0.0) == 0.0;
         }},
        {"invariant viscous Burgers step is Galilean invariant",
         [&] {
             return invariantize_check(Pde::Vbe, Scheme::Sym, GroupAction::VbeGalilean, 0.5) <=
                    1e-10;
         }},
    };

    int failures = 0;
    for (const auto& [name, check] : checks) {
        bool ok = false;
        std::string detail;
        try {
            ok = check();
        } catch (const std::exception& e) {
            detail = std::string(" (") + e.what() + ")";
        }
        out << (ok ? "PASS " : "FAIL ") << name << detail << '\n';
        failures += ok ? 0 : 1;
    }
    out << (failures == 0 ? "selftest passed" : "selftest failed: " + std::to_string(failures))
        << '\n';
    return failures;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Compact and invariant compact finite-difference experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value config file");
        sub->add_option("overrides", overrides, "key=value overrides, applied after the file");
    };
    CLI::App* run = app.add_subcommand("run", "Run one experiment and write its profile");
    CLI::App* converge = app.add_subcommand("converge", "Grid-refinement study (needs sizes=...)");
    CLI::App* galilean = app.add_subcommand("galilean", "Galilean-boost study on viscous Burgers");
    CLI::App* selftest = app.add_subcommand("selftest", "Run the built-in example checks");
    for (CLI::App* sub : {run, converge, galilean}) {
        add_common(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (selftest->parsed()) {
            return cmd_selftest(out) == 0 ? 0 : 1;
        }
        ConfigEntries entries;
        if (!config_path.empty()) {
            entries = read_config_file(config_path);
        }
        for (const auto& o : overrides) {
            entries.push_back(parse_override(o));
        }
        const RunConfig config = resolve_config(entries);
        if (run->parsed()) {
            cmd_run(config, out, err);
        } else if (converge->parsed()) {
            cmd_converge(config, out, err, thread_budget());
        } else if (galilean->parsed()) {
            cmd_galilean(config, out, err, thread_budget());
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace invcompact::cli
