#include "invcompact/metrics.hpp"

#include "invcompact/error.hpp"

#include <cmath>
#include <string>

namespace invcompact {

namespace {

void require_same_size(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size() || a.empty()) {
        throw Error(ErrorCode::ShapeMismatch, "error metrics need two non-empty fields of equal "
                                              "size, got " +
                                                  std::to_string(a.size()) + " and " +
                                                  std::to_string(b.size()));
    }
}

} // namespace

double rmse(std::span<const double> numeric, std::span<const double> exact)
{
    require_same_size(numeric, exact);
    double sum = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double d = numeric[i] - exact[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(numeric.size()));
}

double linf(std::span<const double> numeric, std::span<const double> exact)
{
    require_same_size(numeric, exact);
    double worst = 0.0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double d = std::abs(numeric[i] - exact[i]);
        if (!(d <= worst)) {
            worst = d;  // also propagates NaN
        }
    }
    return worst;
}

double fit_log_slope(std::span<const double> h, std::span<const double> err)
{
    if (h.size() != err.size() || h.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "slope fit needs at least two (h, error) pairs");
    }
    const auto n = static_cast<double>(h.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!(h[i] > 0.0) || !(err[i] > 0.0)) {
            throw Error(ErrorCode::InvalidArgument, "slope fit needs positive h and error");
        }
        const double lx = std::log(h[i]);
        const double ly = std::log(err[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (!(std::abs(denom) > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "slope fit needs distinct h values");
    }
    return (n * sxy - sx * sy) / denom;
}

} // namespace invcompact
