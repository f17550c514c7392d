#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "oscloc/lattice.hpp"
#include "oscloc/model.hpp"

namespace oscloc {

/// z = E + i epsilon. epsilon = 0 is allowed in finite volume as long as E
/// stays away from the spectrum.
struct SpectralParameterZ {
    double energy = 0.0;
    double epsilon = 0.0;

    std::complex<double> value() const noexcept { return {energy, epsilon}; }
};

/// g = (h - z)^{-1} d_y by LU. Throws ConditioningError, carrying the distance
/// from z to the nearest eigenvalue, when the system is numerically singular
/// or the residual exceeds 1e-10 (1 + |z|).
Eigen::VectorXcd green_column(const Eigen::MatrixXd& h, SiteIndex y, SpectralParameterZ z);

/// G(x, y; z) = <d_x, (h - z)^{-1} d_y>.
std::complex<double> green_function(const Eigen::MatrixXd& h, SiteIndex x, SiteIndex y,
                                     SpectralParameterZ z);

/// The full resolvent (h - z)^{-1}.
Eigen::MatrixXcd green_matrix(const Eigen::MatrixXd& h, SpectralParameterZ z);

struct MomentEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    std::uint64_t count = 0;
    std::uint64_t resamples = 0;
};

struct MomentOptions {
    double s = 0.5;
    SpectralParameterZ z;
    std::uint64_t realizations = 100;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

/// Monte Carlo estimate of E |G(x, y; z)|^s over seeded realizations of the
/// disorder, with the standard error of the mean. A realization whose system
/// is singular at z is redrawn once from the reserved resample stream; more
/// than 1% redraws raises StatisticalValidityError.
MomentEstimate fractional_moment_estimate(const ModelConfig& model, SiteIndex x, SiteIndex y,
                                          const MomentOptions& options);

}  // namespace oscloc
