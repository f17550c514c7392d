#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace oscloc {

/// Welford accumulator. Feeding the same values in the same order gives
/// bit-identical results, and a constant stream has variance exactly 0.
class RunningMean {
public:
    void add(double value) noexcept;

    std::uint64_t count() const noexcept { return count_; }
    double mean() const noexcept { return mean_; }
    /// Unbiased sample variance; 0 for fewer than two values.
    double variance() const noexcept;
    /// Standard error of the mean, sqrt(variance / count).
    double standard_error() const noexcept;

private:
    std::uint64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Leave-one-out jackknife standard error of the sample mean.
double jackknife_stderr(std::span<const double> values);

/// Spearman rank correlation (average ranks for ties).
double spearman(std::span<const double> a, std::span<const double> b);

}  // namespace oscloc
