#pragma once

// Reference computations used only by the tests. None of them goes through
// SpectralData: they either exponentiate the classical generator directly,
// sum plane waves, or use single-mode textbook formulas.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Core>
#include <unsupported/Eigen/MatrixFunctions>

#include "oscloc/lattice.hpp"
#include "oscloc/model.hpp"

namespace oscloc::oracle {

/// Random model with masses, springs and couplings bounded away from zero.
inline ModelParams random_params(std::mt19937_64& rng, const Lattice& lattice) {
    std::uniform_real_distribution<double> mass(0.3, 2.0), spring(0.2, 3.0), coupling(0.1, 1.5);
    ModelParams p{lattice, {}, {}, {}};
    for (SiteIndex x = 0; x < lattice.site_count(); ++x) {
        p.mass.push_back(mass(rng));
        p.spring.push_back(spring(rng));
    }
    for (std::size_t e = 0; e < lattice.edges().size(); ++e) p.coupling.push_back(coupling(rng));
    return p;
}

inline Lattice random_lattice(std::mt19937_64& rng, int max_side_1d = 20, int max_half_2d = 3) {
    std::uniform_int_distribution<int> dim(1, 2);
    if (dim(rng) == 1) {
        std::uniform_int_distribution<int> half(0, max_side_1d / 2);
        return build_lattice(1, half(rng));
    }
    std::uniform_int_distribution<int> half(0, max_half_2d);
    return build_lattice(2, half(rng));
}

/// Heisenberg flow of (q, p) for H = q.h0 q + p.mu p:
/// (q(t), p(t)) = Phi(t) (q, p) with Phi(t) = exp(t [[0, 2 mu], [-2 h0, 0]]).
inline Eigen::MatrixXd classical_flow(const ModelParams& params, double t) {
    const Eigen::MatrixXd h0 = assemble_h0(params);
    const Eigen::VectorXd mu = mass_matrix(params);
    const auto n = h0.rows();
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    gen.topRightCorner(n, n) = 2.0 * Eigen::MatrixXd(mu.asDiagonal());
    gen.bottomLeftCorner(n, n) = -2.0 * h0;
    return Eigen::MatrixXd(t * gen).exp();
}

/// -i [q_x(t), q_y] etc. read off the flow: [q_x(t), p_y] = i Phi_qq(x, y),
/// [q_x(t), q_y] = -i Phi_qp(x, y), and likewise for p_x(t).
inline Eigen::Matrix2d flow_commutator(const Eigen::MatrixXd& phi, Eigen::Index n, SiteIndex x,
                                       SiteIndex y) {
    Eigen::Matrix2d a;
    a(0, 0) = -phi(x, n + y);
    a(0, 1) = phi(x, y);
    a(1, 0) = -phi(n + x, n + y);
    a(1, 1) = phi(n + x, y);
    return a;
}

/// Plane-wave evaluation on a constant-parameter ring of `sites` sites:
/// h has eigenvalues s(kappa) = (k/2 + 4 lambda sin^2(kappa/2)) / (2m) with
/// eigenfunctions e^{i kappa x} / sqrt(sites), so for real phi
/// <d_x, phi(h) d_y> = (1/sites) sum_kappa phi(s(kappa)) cos(kappa (x - y)).
template <class Fn>
auto ring_matel(int sites, double mass, double spring, double coupling, Fn&& phi, int separation) {
    using Value = std::decay_t<decltype(phi(1.0))>;
    Value sum{0};
    for (int j = 0; j < sites; ++j) {
        const double kappa = 2.0 * std::numbers::pi * j / sites;
        const double sn = std::sin(0.5 * kappa);
        const double s = (0.5 * spring + 4.0 * coupling * sn * sn) / (2.0 * mass);
        sum += phi(s) * std::cos(kappa * separation);
    }
    return sum / static_cast<double>(sites);
}

/// Single oscillator H = p^2 / (2M) + M w^2 q^2 / 2 at inverse temperature
/// beta: <q^2> = coth(beta w / 2) / (2 M w), <p^2> = M w coth(beta w / 2) / 2.
inline double qho_q2(double mass, double omega, double beta) {
    return 1.0 / (2.0 * mass * omega * std::tanh(0.5 * beta * omega));
}

inline double qho_p2(double mass, double omega, double beta) {
    return mass * omega / (2.0 * std::tanh(0.5 * beta * omega));
}

}  // namespace oscloc::oracle
