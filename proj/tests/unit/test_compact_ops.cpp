#include "invcompact/compact_ops.hpp"
#include "invcompact/analytic.hpp"
#include "invcompact/error.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace invcompact;

namespace {

std::vector<double> sample(const Grid1D& g, const std::function<double(double)>& f)
{
    std::vector<double> u(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        u[i] = f(g.x(i));
    }
    return u;
}

double interior_error(const std::vector<double>& a, const std::vector<double>& b)
{
    return oracle::max_abs_diff(a, b, 1, 1);
}

} // namespace

TEST(CompactOps, ConstantHasZeroDerivatives)
{
    const Grid1D g = Grid1D::over(-1.0, 2.0, 17);
    const std::vector<double> u(g.n, 3.7);
    for (const double v : compact_dx(u, g)) EXPECT_NEAR(v, 0.0, 1e-12);
    for (const double v : compact_dxx(u, g)) EXPECT_NEAR(v, 0.0, 1e-10);
}

TEST(CompactOps, LinearHasUnitSlope)
{
    const Grid1D g = Grid1D::over(0.0, 1.0, 11);
    for (const double v : compact_dx(g.nodes(), g)) EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(CompactOps, QuadraticSecondDerivative)
{
    const Grid1D g = Grid1D::over(-2.0, 3.0, 21);
    const auto u = sample(g, [](double x) { return x * x; });
    for (const double v : compact_dxx(u, g, BoundaryPolicy::exact(2.0, 2.0))) {
        EXPECT_NEAR(v, 2.0, 1e-10);
    }
}

TEST(CompactOps, CubicExactnessBothClosures)
{
    const Grid1D g = Grid1D::over(-1.5, 2.5, 23);
    const auto p = [](double x) { return 0.3 - 1.2 * x + 0.7 * x * x - 0.4 * x * x * x; };
    const auto dp = [](double x) { return -1.2 + 1.4 * x - 1.2 * x * x; };
    const auto ddp = [](double x) { return 1.4 - 2.4 * x; };
    const auto u = sample(g, p);
    const auto exact_dx = sample(g, dp);
    const auto exact_dxx = sample(g, ddp);

    const auto dx_exact_ends =
        compact_dx(u, g, BoundaryPolicy::exact(dp(g.x(0)), dp(g.x_last())));
    const auto dxx_exact_ends =
        compact_dxx(u, g, BoundaryPolicy::exact(ddp(g.x(0)), ddp(g.x_last())));
    EXPECT_LE(oracle::max_abs_diff(dx_exact_ends, exact_dx), 1e-10);
    EXPECT_LE(oracle::max_abs_diff(dxx_exact_ends, exact_dxx), 1e-10);

    // The one-sided closures are third order, hence also exact on cubics.
    EXPECT_LE(oracle::max_abs_diff(compact_dx(u, g), exact_dx), 1e-10);
    EXPECT_LE(oracle::max_abs_diff(compact_dxx(u, g), exact_dxx), 1e-9);
}

TEST(CompactOps, Linearity)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const Grid1D g = Grid1D::over(0.0, 1.0, 33);
    std::vector<double> u(g.n), v(g.n), w(g.n);
    for (auto& x : u) x = dist(rng);
    for (auto& x : v) x = dist(rng);
    const double a = 1.7, b = -0.6;
    for (std::size_t i = 0; i < g.n; ++i) w[i] = a * u[i] + b * v[i];

    const auto check = [&](const std::vector<double>& ou, const std::vector<double>& ov,
                           const std::vector<double>& ow, double scale) {
        for (std::size_t i = 0; i < g.n; ++i) {
            EXPECT_NEAR(ow[i], a * ou[i] + b * ov[i], 1e-12 * scale);
        }
    };
    const double h = g.h;
    check(compact_dx(u, g), compact_dx(v, g), compact_dx(w, g), 1.0 / h);
    check(compact_dxx(u, g), compact_dxx(v, g), compact_dxx(w, g), 1.0 / (h * h));

    const BoundaryPolicy bu = BoundaryPolicy::exact(0.3, -0.2);
    const BoundaryPolicy bv = BoundaryPolicy::exact(-1.1, 0.9);
    const BoundaryPolicy bw = BoundaryPolicy::exact(a * 0.3 + b * -1.1, a * -0.2 + b * 0.9);
    check(compact_dx(u, g, bu), compact_dx(v, g, bv), compact_dx(w, g, bw), 1.0 / h);
}

TEST(CompactOps, FourthOrderOnSine)
{
    const std::vector<std::size_t> sizes{41, 81, 161};
    std::vector<double> hs, e1, e2;
    for (const std::size_t n : sizes) {
        const Grid1D g = Grid1D::over(0.0, 2.0 * std::numbers::pi, n);
        const auto u = sample(g, [](double x) { return std::sin(x); });
        const auto d1 = compact_dx(u, g, BoundaryPolicy::exact(1.0, 1.0));
        const auto d2 = compact_dxx(u, g, BoundaryPolicy::exact(0.0, 0.0));
        hs.push_back(g.h);
        e1.push_back(interior_error(d1, sample(g, [](double x) { return std::cos(x); })));
        e2.push_back(interior_error(d2, sample(g, [](double x) { return -std::sin(x); })));
    }
    const double s1 = oracle::log_slope(hs, e1);
    const double s2 = oracle::log_slope(hs, e2);
    EXPECT_GE(s1, 3.8);
    EXPECT_LE(s1, 4.5);
    EXPECT_GE(s2, 3.8);
    EXPECT_LE(s2, 4.5);
}

TEST(CompactOps, OneSidedClosureKeepsInteriorOrder)
{
    std::vector<double> hs, e;
    for (const std::size_t n : {41u, 81u, 161u}) {
        const Grid1D g = Grid1D::over(0.3, 2.3, n);
        const auto u = sample(g, [](double x) { return std::exp(std::sin(x)); });
        const auto d = compact_dx(u, g);
        const auto ref = sample(g, [](double x) { return std::cos(x) * std::exp(std::sin(x)); });
        hs.push_back(g.h);
        e.push_back(oracle::max_abs_diff(d, ref, g.n / 4, g.n / 4));
    }
    EXPECT_GE(oracle::log_slope(hs, e), 3.8);
}

TEST(CompactOps, PlaneAndProductIn2D)
{
    const Grid2D g = Grid2D::over(-1.0, 1.0, 9, 0.0, 2.0, 11);
    Field2D plane(g.nx, g.ny), prod(g.nx, g.ny);
    for (std::size_t i = 0; i < g.nx; ++i) {
        for (std::size_t j = 0; j < g.ny; ++j) {
            plane(i, j) = g.x(i) + 2.0 * g.y(j);
            prod(i, j) = g.x(i) * g.x(i) * g.y(j);
        }
    }
    const auto dx = compact_dx_along_x(plane, g);
    const auto dy = compact_dx_along_y(plane, g);
    const auto dxx = compact_dxx_along_x(
        prod, g, [&](std::size_t j) { return BoundaryPolicy::exact(2 * g.y(j), 2 * g.y(j)); });
    for (std::size_t i = 0; i < g.nx; ++i) {
        for (std::size_t j = 0; j < g.ny; ++j) {
            EXPECT_NEAR(dx(i, j), 1.0, 1e-12);
            EXPECT_NEAR(dy(i, j), 2.0, 1e-12);
            EXPECT_NEAR(dxx(i, j), 2.0 * g.y(j), 1e-10);
        }
    }
}

TEST(CompactOps, GaussianAxisDerivativesConvergeAtFourthOrder)
{
    const PdeParams p;
    const double a = 4.0 * p.L * p.L;
    // Partial derivatives of exp(-(x^2 + y^2) / a) / (pi a), coded by hand.
    const auto g0 = [&](double x, double y) {
        return std::exp(-(x * x + y * y) / a) / (std::numbers::pi * a);
    };
    const auto gx = [&](double x, double y) { return -2.0 * x / a * g0(x, y); };
    const auto gy = [&](double x, double y) { return -2.0 * y / a * g0(x, y); };
    const auto gxx = [&](double x, double y) { return (4.0 * x * x / (a * a) - 2.0 / a) * g0(x, y); };
    const auto gyy = [&](double x, double y) { return (4.0 * y * y / (a * a) - 2.0 / a) * g0(x, y); };

    std::vector<double> hs, ex, ey, exx, eyy;
    for (const std::size_t n : {41u, 81u, 161u}) {
        const Grid2D g = Grid2D::over(-2.0, 2.0, n, -2.0, 2.0, n);
        Field2D u(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) u(i, j) = ade2d_exact(0.0, g.x(i), g.y(j), p);
        const double lo = g.x(0), hi = g.x(n - 1);
        const auto ends = [&](const auto& f, bool along_x) {
            return [&, along_x](std::size_t line) {
                const double other = along_x ? g.y(line) : g.x(line);
                return along_x ? BoundaryPolicy::exact(f(lo, other), f(hi, other))
                               : BoundaryPolicy::exact(f(other, lo), f(other, hi));
            };
        };
        const auto dx = compact_dx_along_x(u, g, ends(gx, true));
        const auto dy = compact_dx_along_y(u, g, ends(gy, false));
        const auto dxx = compact_dxx_along_x(u, g, ends(gxx, true));
        const auto dyy = compact_dxx_along_y(u, g, ends(gyy, false));
        double m[4] = {0, 0, 0, 0};
        for (std::size_t i = 1; i + 1 < n; ++i) {
            for (std::size_t j = 1; j + 1 < n; ++j) {
                const double x = g.x(i), y = g.y(j);
                m[0] = std::max(m[0], std::abs(dx(i, j) - gx(x, y)));
                m[1] = std::max(m[1], std::abs(dy(i, j) - gy(x, y)));
                m[2] = std::max(m[2], std::abs(dxx(i, j) - gxx(x, y)));
                m[3] = std::max(m[3], std::abs(dyy(i, j) - gyy(x, y)));
            }
        }
        hs.push_back(g.hx);
        ex.push_back(m[0]);
        ey.push_back(m[1]);
        exx.push_back(m[2]);
        eyy.push_back(m[3]);
    }
    for (const auto* e : {&ex, &ey, &exx, &eyy}) {
        EXPECT_GE(oracle::log_slope(hs, *e), 3.8);
    }
}

TEST(CompactOps, ShapeMismatchRaised)
{
    const Grid1D g = Grid1D::over(0.0, 1.0, 11);
    const std::vector<double> u(10, 0.0);
    try {
        compact_dx(u, g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
    }
    const Grid2D g2 = Grid2D::over(0, 1, 6, 0, 1, 7);
    EXPECT_THROW(compact_dx_along_y(Field2D(6, 6), g2), Error);
}
