#include "oscloc/green.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "oscloc/errors.hpp"
#include "oscloc/parallel.hpp"
#include "oscloc/resample.hpp"
#include "oscloc/statistics.hpp"

namespace oscloc {

namespace {

constexpr double kMinReciprocalCondition = 1e-13;

double distance_to_spectrum(const Eigen::MatrixXd& h, std::complex<double> z) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        best = std::min(best, std::abs(solver.eigenvalues()(k) - z));
    }
    return best;
}

[[noreturn]] void throw_conditioning(const Eigen::MatrixXd& h, std::complex<double> z,
                                     const std::string& reason) {
    const double distance = distance_to_spectrum(h, z);
    throw ConditioningError("resolvent at z = " + std::to_string(z.real()) + " + " +
                                std::to_string(z.imag()) + "i is " + reason +
                                " (distance to spectrum " + std::to_string(distance) + ")",
                            distance);
}

Eigen::PartialPivLU<Eigen::MatrixXcd> factorize(const Eigen::MatrixXd& h, std::complex<double> z) {
    if (h.rows() != h.cols()) throw ConfigError("h must be square");
    Eigen::MatrixXcd shifted = h.cast<std::complex<double>>();
    shifted.diagonal().array() -= z;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
    const auto& u = lu.matrixLU();
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        if (u(i, i) == 0.0) throw_conditioning(h, z, "singular");
    }
    if (lu.rcond() < kMinReciprocalCondition) throw_conditioning(h, z, "ill-conditioned");
    return lu;
}

void check_residual(const Eigen::MatrixXd& h, std::complex<double> z, const Eigen::MatrixXcd& rhs,
                    const Eigen::MatrixXcd& solution) {
    Eigen::MatrixXcd residual = h.cast<std::complex<double>>() * solution - z * solution - rhs;
    const double bound = 1e-10 * (1.0 + std::abs(z));
    for (Eigen::Index j = 0; j < residual.cols(); ++j) {
        if (residual.col(j).norm() > bound) throw_conditioning(h, z, "beyond the residual target");
    }
}

}  // namespace

Eigen::VectorXcd green_column(const Eigen::MatrixXd& h, SiteIndex y, SpectralParameterZ z) {
    if (y < 0 || y >= h.rows()) throw ConfigError("site index out of range");
    const auto lu = factorize(h, z.value());
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(h.rows());
    rhs(y) = 1.0;
    Eigen::VectorXcd g = lu.solve(rhs);
    check_residual(h, z.value(), rhs, g);
    return g;
}

std::complex<double> green_function(const Eigen::MatrixXd& h, SiteIndex x, SiteIndex y,
                                     SpectralParameterZ z) {
    if (x < 0 || x >= h.rows()) throw ConfigError("site index out of range");
    return green_column(h, y, z)(x);
}

Eigen::MatrixXcd green_matrix(const Eigen::MatrixXd& h, SpectralParameterZ z) {
    const auto lu = factorize(h, z.value());
    const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(h.rows(), h.cols());
    Eigen::MatrixXcd g = lu.solve(identity);
    check_residual(h, z.value(), identity, g);
    return g;
}

MomentEstimate fractional_moment_estimate(const ModelConfig& model, SiteIndex x, SiteIndex y,
                                          const MomentOptions& options) {
    if (!(options.s > 0.0 && options.s < 1.0)) {
        throw ConfigError("fractional moment exponent s must lie in (0, 1)");
    }
    if (options.realizations < 1) throw ConfigError("need at least one realization");
    model.validate();
    const Lattice lattice = model.lattice();
    if (x < 0 || y < 0 || x >= lattice.site_count() || y >= lattice.site_count()) {
        throw ConfigError("site index out of range");
    }
    DisorderSpec disorder = model.disorder;
    disorder.seed = options.seed;

    auto draws = parallel_map(options.realizations, options.workers, [&](std::size_t r) {
        return with_resample(r, [&](std::uint64_t stream) {
            const ModelParams params = sample_params(disorder, lattice, r, stream);
            const Eigen::MatrixXd h = assemble_h(params);
            return std::pow(std::abs(green_function(h, x, y, options.z)), options.s);
        });
    });

    RunningMean acc;
    MomentEstimate out;
    for (const auto& [value, resampled] : draws) {
        acc.add(value);
        out.resamples += resampled ? 1 : 0;
    }
    check_resample_fraction(out.resamples, options.realizations);
    out.mean = acc.mean();
    out.standard_error = acc.standard_error();
    out.count = acc.count();
    return out;
}

}  // namespace oscloc
