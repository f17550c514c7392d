#pragma once

#include <Eigen/Core>

#include "oscloc/model.hpp"
#include "oscloc/spectral.hpp"

namespace oscloc {

/// One realization of the oscillator lattice: parameters, the one-particle
/// matrix h and its spectral data, plus the diagonal mass-matrix factors
/// every observable formula needs. Immutable after construction.
class OscillatorSystem {
public:
    explicit OscillatorSystem(ModelParams params, double ptol = kDefaultPositivityTolerance);

    const ModelParams& params() const noexcept { return params_; }
    const Lattice& lattice() const noexcept { return params_.lattice; }
    const Eigen::MatrixXd& h() const noexcept { return h_; }
    const SpectralData& spectrum() const noexcept { return spectrum_; }

    Eigen::Index size() const noexcept { return h_.rows(); }
    double mass(SiteIndex x) const { return params_.mass[static_cast<std::size_t>(x)]; }

    /// mu^{1/2} = diag(1/sqrt(2 m_x)).
    const Eigen::VectorXd& sqrt_mu() const noexcept { return sqrt_mu_; }
    /// mu^{-1/2} = diag(sqrt(2 m_x)).
    const Eigen::VectorXd& inv_sqrt_mu() const noexcept { return inv_sqrt_mu_; }

private:
    ModelParams params_;
    Eigen::MatrixXd h_;
    SpectralData spectrum_;
    Eigen::VectorXd sqrt_mu_;
    Eigen::VectorXd inv_sqrt_mu_;
};

/// The symplectic matrix [[mu^{1/2} O, 0], [0, mu^{-1/2} O]] that brings the
/// quadratic form diag(h0, mu) to diag(gamma^2, I).
Eigen::MatrixXd symplectic_transform(const OscillatorSystem& system);

/// J = [[0, -I], [I, 0]].
Eigen::MatrixXd symplectic_form(Eigen::Index n);

}  // namespace oscloc
