#include "oscloc/fit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "oscloc/errors.hpp"

namespace oscloc {

namespace {

constexpr double kMinRelativeError = 1e-8;

}  // namespace

DecayFit fit_exponential_decay(std::span<const EstimateRow> rows, int r_min, int r_max) {
    if (r_min > r_max) throw ConfigError("fit window has r_min > r_max");
    std::vector<double> xs, ys, ws;
    std::set<int> distinct;
    for (const auto& row : rows) {
        if (row.separation < r_min || row.separation > r_max) continue;
        if (!(row.mean > 0.0) || !std::isfinite(row.mean)) {
            throw FitDomainError("non-positive mean " + std::to_string(row.mean) +
                                 " at separation " + std::to_string(row.separation) +
                                 "; shrink the fit window");
        }
        const double rel = std::max(row.standard_error / row.mean, kMinRelativeError);
        xs.push_back(row.separation);
        ys.push_back(std::log(row.mean));
        ws.push_back(1.0 / (rel * rel));
        distinct.insert(row.separation);
    }
    if (distinct.size() < 4) {
        throw FitDomainError("exponential fit needs at least 4 distinct separations in [" +
                             std::to_string(r_min) + ", " + std::to_string(r_max) + "], got " +
                             std::to_string(distinct.size()));
    }

    // Normalize weights; only their ratios matter for the estimates.
    const double wmax = *std::max_element(ws.begin(), ws.end());
    double sw = 0.0, sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ws[i] /= wmax;
        sw += ws[i];
        sx += ws[i] * xs[i];
        sy += ws[i] * ys[i];
    }
    const double xbar = sx / sw, ybar = sy / sw;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += ws[i] * (xs[i] - xbar) * (xs[i] - xbar);
        sxy += ws[i] * (xs[i] - xbar) * (ys[i] - ybar);
        syy += ws[i] * (ys[i] - ybar) * (ys[i] - ybar);
    }
    const double slope = sxy / sxx;
    const double intercept = ybar - slope * xbar;

    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - intercept - slope * xs[i];
        ss_res += ws[i] * r * r;
    }

    DecayFit fit;
    fit.prefactor = std::exp(intercept);
    fit.decay_rate = -slope;
    // Flat data: R^2 is defined as 0.
    const bool flat = syy <= 1e-24 * sw * (1.0 + ybar * ybar);
    fit.r_squared = !flat ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 0.0;
    const double dof = static_cast<double>(xs.size()) - 2.0;
    fit.decay_rate_stderr = std::sqrt(ss_res / dof / sxx);
    fit.r_min = r_min;
    fit.r_max = r_max;
    fit.points = static_cast<int>(xs.size());
    return fit;
}

}  // namespace oscloc
