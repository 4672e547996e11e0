#include "invcompact/error.hpp"
#include "invcompact/experiment.hpp"
#include "invcompact_cli/commands.hpp"
#include "invcompact_cli/config.hpp"
#include "invcompact_cli/csv.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <map>
#include <numbers>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

using namespace invcompact;
using namespace invcompact::cli;

namespace {

struct Invocation {
    int code = 0;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "invcompact");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "invcompact_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string config_error_message(const ConfigEntries& entries)
{
    try {
        resolve_config(entries);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ConfigInvalid);
        return e.what();
    }
    ADD_FAILURE() << "expected ConfigInvalid";
    return {};
}

} // namespace

TEST(Csv, RoundTripIsExact)
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint64_t> bits;
    std::vector<double> values{0.0, -0.0, 1.0, 0.1, -1e-300, 5e-324, 1.7976931348623157e308,
                               std::numbers::pi};
    while (values.size() < 2000) {
        const std::uint64_t b = bits(rng);
        double v;
        std::memcpy(&v, &b, sizeof v);
        if (std::isfinite(v)) values.push_back(v);
    }
    std::ostringstream out;
    write_row(out, {"value"});
    for (const double v : values) write_row(out, {format_real(v)});
    const CsvTable t = parse_csv(out.str());
    ASSERT_EQ(t.header, std::vector<std::string>{"value"});
    ASSERT_EQ(t.rows.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double back = parse_real(t.rows[i][0]);
        EXPECT_EQ(std::memcmp(&back, &values[i], sizeof back), 0) << t.rows[i][0];
    }
    EXPECT_EQ(format_real(0.25), "2.5000000000000000e-01");
}

TEST(Config, FileCommentsAndOverrides)
{
    const auto entries = parse_config_text("# header\npde = ade1d  # inline\n\n  tau=0.002\nn = 41\n");
    ASSERT_EQ(entries.size(), 3u);
    ConfigEntries all = entries;
    all.push_back(parse_override("n=61"));
    const RunConfig c = resolve_config(all);
    EXPECT_EQ(c.spec.pde, Pde::Ade1d);
    EXPECT_EQ(c.spec.scheme, Scheme::Sym);
    EXPECT_EQ(c.spec.nx, 61u);
    EXPECT_EQ(c.spec.tau, 0.002);
    EXPECT_EQ(c.spec.t_final, 1.0);
    EXPECT_EQ(c.spec.x_domain[0], -2.0);
}

TEST(Config, InvalidFieldsAreNamed)
{
    EXPECT_NE(config_error_message({{"pde", "ibe"}, {"scheme", "sym1"}}).find("'scheme'"),
              std::string::npos);
    EXPECT_NE(config_error_message({{"tau", "-1"}}).find("'tau'"), std::string::npos);
    EXPECT_NE(config_error_message({{"tau", "nan"}}).find("'tau'"), std::string::npos);
    EXPECT_NE(config_error_message({{"n", "4"}}).find("'n'"), std::string::npos);
    EXPECT_NE(config_error_message({{"nu", "inf"}}).find("'nu'"), std::string::npos);
    EXPECT_NE(config_error_message({{"bogus", "1"}}).find("'bogus'"), std::string::npos);
    EXPECT_NE(config_error_message({{"pde", "heat"}}).find("'pde'"), std::string::npos);
    EXPECT_NE(config_error_message({{"domain", "1,0"}}).find("'domain'"), std::string::npos);
    EXPECT_NE(config_error_message({{"galilean_c", "1"}}).find("'galilean_c'"), std::string::npos);
    EXPECT_THROW(parse_config_text("no equals sign\n"), Error);
    EXPECT_THROW(parse_override("n"), Error);
}

TEST(Cli, RunWritesProfileAndSummary)
{
    const auto profile = scratch("ibe_sym.csv");
    const auto r = invoke({"run", "pde=ibe", "scheme=sym", "output=" + profile.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const CsvTable summary = parse_csv(r.out);
    ASSERT_EQ(summary.header, (std::vector<std::string>{"scheme", "pde", "n", "h", "tau", "t_final",
                                                        "rmse", "linf", "wall_time"}));
    ASSERT_EQ(summary.rows.size(), 1u);
    const ErrorReport direct = run_experiment(default_spec(Pde::Ibe, Scheme::Sym));
    EXPECT_EQ(parse_real(summary.rows[0][7]), direct.linf);

    const CsvTable prof = parse_csv(slurp(profile));
    EXPECT_EQ(prof.header, (std::vector<std::string>{"x", "u_numeric", "u_exact", "error"}));
    EXPECT_EQ(prof.rows.size(), 31u);
}

TEST(Cli, ZeroFinalTimeReproducesInitialData)
{
    const auto profile = scratch("ade2d_t0.csv");
    const auto r = invoke({"run", "pde=ade2d", "scheme=comp", "t_final=0", "n=11",
                           "output=" + profile.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const CsvTable prof = parse_csv(slurp(profile));
    ASSERT_EQ(prof.header.size(), 5u);
    ASSERT_EQ(prof.rows.size(), 121u);
    const PdeParams p;
    for (const auto& row : prof.rows) {
        EXPECT_EQ(parse_real(row[4]), 0.0);
        EXPECT_EQ(parse_real(row[2]), ade2d_exact(0.0, parse_real(row[0]), parse_real(row[1]), p));
    }
}

TEST(Cli, ConfigFileWithOverrides)
{
    const auto cfg = scratch("vbe.cfg");
    std::ofstream(cfg) << "pde = vbe\nscheme = comp\nt_final = 0.01  # short\n";
    const auto profile = scratch("vbe.csv");
    const auto r = invoke({"run", "--config", cfg.string(), "scheme=ftcs", "output=" + profile.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const CsvTable s = parse_csv(r.out);
    EXPECT_EQ(s.rows[0][0], "ftcs");
    EXPECT_EQ(parse_real(s.rows[0][5]), 0.01);
}

TEST(Cli, ErrorsGiveNonZeroExitOnStderr)
{
    const auto mismatch = invoke({"run", "pde=ibe", "scheme=sym1"});
    EXPECT_NE(mismatch.code, 0);
    EXPECT_TRUE(mismatch.out.empty());
    EXPECT_NE(mismatch.err.find("scheme"), std::string::npos);

    const auto single = invoke({"converge", "pde=ibe", "sizes=31"});
    EXPECT_NE(single.code, 0);
    EXPECT_NE(single.err.find("sizes"), std::string::npos);

    const auto missing = invoke({"run", "--config", scratch("does_not_exist.cfg").string()});
    EXPECT_NE(missing.code, 0);

    const auto breaking = invoke({"run", "pde=ibe", "t_final=1.5", "output=" + scratch("b.csv").string()});
    EXPECT_NE(breaking.code, 0);
    EXPECT_NE(breaking.err.find("PostBreakingTime"), std::string::npos);

    EXPECT_NE(invoke({}).code, 0);
}

TEST(Cli, ConvergeRowsPerScheme)
{
    const auto r = invoke({"converge", "pde=ibe", "sizes=31,61,121"});
    ASSERT_EQ(r.code, 0) << r.err;
    const CsvTable t = parse_csv(r.out);
    EXPECT_EQ(t.header, (std::vector<std::string>{"scheme", "n", "h", "linf", "slope"}));
    ASSERT_EQ(t.rows.size(), 9u);
    ExperimentSpec s = default_spec(Pde::Ibe, Scheme::Comp);
    s.nx = 61;
    EXPECT_EQ(parse_real(t.rows[4][3]), run_experiment(s).linf);
    EXPECT_EQ(t.rows[3][4], t.rows[5][4]);
}

TEST(Cli, GalileanTable)
{
    const auto r = invoke({"galilean", "pde=vbe", "c_values=0,0.5,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const CsvTable t = parse_csv(r.out);
    EXPECT_EQ(t.header, (std::vector<std::string>{"c", "scheme", "rmse", "linf"}));
    ASSERT_EQ(t.rows.size(), 9u);
    std::map<std::string, std::vector<double>> linf;
    for (const auto& row : t.rows) linf[row[1]].push_back(parse_real(row[3]));
    EXPECT_NEAR(linf["sym"][1], linf["sym"][0], 1e-8 * linf["sym"][0]);
    EXPECT_NEAR(linf["sym"][2], linf["sym"][0], 1e-8 * linf["sym"][0]);
    EXPECT_LT(linf["ftcs"][0], linf["ftcs"][1]);
    EXPECT_LT(linf["ftcs"][1], linf["ftcs"][2]);

    const auto zero = invoke({"galilean", "pde=vbe", "c_values=0", "schemes=sym"});
    const auto run = invoke({"run", "pde=vbe", "scheme=sym", "output=" + scratch("g0.csv").string()});
    EXPECT_EQ(parse_csv(zero.out).rows[0][3], parse_csv(run.out).rows[0][7]);
}

TEST(Cli, SelftestPasses)
{
    const auto r = invoke({"selftest"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ThreadBudgetFromEnvironment)
{
    ::setenv("THREADS", "3", 1);
    EXPECT_EQ(thread_budget(), 3u);
    ::setenv("THREADS", "zero", 1);
    EXPECT_GE(thread_budget(), 1u);
    ::unsetenv("THREADS");
}
