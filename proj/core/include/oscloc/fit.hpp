#pragma once

#include <span>

#include "oscloc/experiment.hpp"

namespace oscloc {

/// mean(r) ~ prefactor * exp(-decay_rate * r) on [r_min, r_max].
struct DecayFit {
    double prefactor = 0.0;
    double decay_rate = 0.0;
    /// Standard error of decay_rate, scaled by the reduced chi-square.
    double decay_rate_stderr = 0.0;
    double r_squared = 0.0;
    int r_min = 0;
    int r_max = 0;
    int points = 0;
};

/// Weighted least squares of log(mean) against separation with weights
/// (stderr / mean)^{-2}, the relative error clipped below at 1e-8. Needs at
/// least four distinct separations in the window, all with positive means;
/// otherwise throws FitDomainError.
DecayFit fit_exponential_decay(std::span<const EstimateRow> rows, int r_min, int r_max);

inline DecayFit fit_exponential_decay(const EstimateTable& table, int r_min, int r_max) {
    return fit_exponential_decay(table.rows, r_min, r_max);
}

}  // namespace oscloc
