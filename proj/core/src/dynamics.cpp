#include "oscloc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oscloc {

namespace {

/// Mode coordinates O^T v.
Eigen::VectorXd to_modes(const OscillatorSystem& system, const Eigen::VectorXd& v) {
    return system.spectrum().eigenvectors().transpose() * v;
}

/// <u, phi(h) v> for real u, v and a real spectral function.
template <class Fn>
double sandwich(const OscillatorSystem& system, Fn&& phi, const Eigen::VectorXd& u_modes,
                const Eigen::VectorXd& v_modes) {
    auto values = spectral_values(system.spectrum(), std::forward<Fn>(phi));
    return (u_modes.array() * values.array() * v_modes.array()).sum();
}

}  // namespace

WeylSymbol WeylSymbol::zero(Eigen::Index sites) {
    return {Eigen::VectorXcd::Zero(sites)};
}

WeylSymbol WeylSymbol::delta(Eigen::Index sites, SiteIndex site, std::complex<double> coefficient) {
    WeylSymbol f = zero(sites);
    f.values(site) = coefficient;
    return f;
}

double symplectic_pairing(const WeylSymbol& f, const WeylSymbol& g) {
    return f.position_part().dot(g.momentum_part()) - f.momentum_part().dot(g.position_part());
}

WeylSymbol evolve_symbol(const OscillatorSystem& system, const WeylSymbol& f, double t) {
    const auto& spec = system.spectrum();
    const auto& gamma = spec.gamma();
    const Eigen::VectorXd a = to_modes(system, system.sqrt_mu().cwiseProduct(f.position_part()));
    const Eigen::VectorXd b = to_modes(system, system.inv_sqrt_mu().cwiseProduct(f.momentum_part()));
    const Eigen::ArrayXd c = (2.0 * t * gamma.array()).cos();
    const Eigen::ArrayXd s = (2.0 * t * gamma.array()).sin();

    const Eigen::VectorXd re_modes = (c * a.array() - gamma.array() * s * b.array()).matrix();
    const Eigen::VectorXd im_modes = (c * b.array() + s * a.array() / gamma.array()).matrix();

    const auto& o = spec.eigenvectors();
    WeylSymbol out;
    out.values.resize(f.size());
    out.values.real() = system.inv_sqrt_mu().cwiseProduct(o * re_modes);
    out.values.imag() = system.sqrt_mu().cwiseProduct(o * im_modes);
    return out;
}

double im_pairing(const OscillatorSystem& system, const WeylSymbol& f, const WeylSymbol& g,
                  double t) {
    const Eigen::VectorXd re_f = to_modes(system, system.sqrt_mu().cwiseProduct(f.position_part()));
    const Eigen::VectorXd im_f = to_modes(system, system.inv_sqrt_mu().cwiseProduct(f.momentum_part()));
    const Eigen::VectorXd re_g = to_modes(system, system.sqrt_mu().cwiseProduct(g.position_part()));
    const Eigen::VectorXd im_g = to_modes(system, system.inv_sqrt_mu().cwiseProduct(g.momentum_part()));

    auto cos_fn = [t](double s) { return std::cos(2.0 * t * std::sqrt(s)); };
    auto inv_sin_fn = [t](double s) { return std::sin(2.0 * t * std::sqrt(s)) / std::sqrt(s); };
    auto sqrt_sin_fn = [t](double s) { return std::sqrt(s) * std::sin(2.0 * t * std::sqrt(s)); };

    return sandwich(system, cos_fn, re_f, im_g)
         - sandwich(system, sqrt_sin_fn, im_f, im_g)
         - sandwich(system, inv_sin_fn, re_f, re_g)
         - sandwich(system, cos_fn, im_f, re_g);
}

double weyl_commutator_norm(const OscillatorSystem& system, const WeylSymbol& f,
                            const WeylSymbol& g, double t) {
    return 2.0 * std::abs(std::sin(0.5 * im_pairing(system, f, g, t)));
}

double weyl_commutator_sup(const OscillatorSystem& system, const WeylSymbol& f,
                           const WeylSymbol& g) {
    const auto& spec = system.spectrum();
    const auto& gamma = spec.gamma();
    const Eigen::ArrayXd re_f = to_modes(system, system.sqrt_mu().cwiseProduct(f.position_part())).array();
    const Eigen::ArrayXd im_f = to_modes(system, system.inv_sqrt_mu().cwiseProduct(f.momentum_part())).array();
    const Eigen::ArrayXd re_g = to_modes(system, system.sqrt_mu().cwiseProduct(g.position_part())).array();
    const Eigen::ArrayXd im_g = to_modes(system, system.inv_sqrt_mu().cwiseProduct(g.momentum_part())).array();

    // theta(t) = sum_k sin_coef_k sin(2 gamma_k t) + cos_coef_k cos(2 gamma_k t)
    const Eigen::ArrayXd sin_coef = -gamma.array() * im_f * im_g - re_f * re_g / gamma.array();
    const Eigen::ArrayXd cos_coef = re_f * im_g - im_f * re_g;

    double amplitude = 0.0;
    for (const auto& [begin, end] : spec.clusters().ranges) {
        const double s = sin_coef.segment(begin, end - begin).sum();
        const double c = cos_coef.segment(begin, end - begin).sum();
        amplitude += std::hypot(s, c);
    }
    return 2.0 * std::sin(0.5 * std::min(amplitude, std::numbers::pi));
}

PqEntry parse_pq_entry(std::string_view name) {
    if (name == "qq") return PqEntry::qq;
    if (name == "qp") return PqEntry::qp;
    if (name == "pq") return PqEntry::pq;
    if (name == "pp") return PqEntry::pp;
    throw ConfigError("unknown entry '" + std::string(name) + "' (expected qq, qp, pq or pp)");
}

const char* to_string(PqEntry entry) noexcept {
    switch (entry) {
    case PqEntry::qq: return "qq";
    case PqEntry::qp: return "qp";
    case PqEntry::pq: return "pq";
    case PqEntry::pp: return "pp";
    }
    return "?";
}

std::pair<int, int> matrix_position(PqEntry entry) noexcept {
    switch (entry) {
    case PqEntry::qq: return {0, 0};
    case PqEntry::qp: return {0, 1};
    case PqEntry::pq: return {1, 0};
    case PqEntry::pp: return {1, 1};
    }
    return {0, 0};
}

Eigen::Matrix2d pq_commutator_matrix(const OscillatorSystem& system, SiteIndex x, SiteIndex y,
                                     double t) {
    const auto& spec = system.spectrum();
    const double mx = system.sqrt_mu()(x), my = system.sqrt_mu()(y);
    auto inv_sin = [t](double s) { return std::sin(2.0 * t * std::sqrt(s)) / std::sqrt(s); };
    auto cosine = [t](double s) { return std::cos(2.0 * t * std::sqrt(s)); };
    auto sqrt_sin = [t](double s) { return std::sqrt(s) * std::sin(2.0 * t * std::sqrt(s)); };

    Eigen::Matrix2d a;
    a(0, 0) = -mx * my * matel(spec, inv_sin, x, y);
    a(0, 1) = (mx / my) * matel(spec, cosine, x, y);
    a(1, 0) = -(my / mx) * matel(spec, cosine, x, y);
    a(1, 1) = -matel(spec, sqrt_sin, x, y) / (mx * my);
    return a;
}

Eigen::Matrix2d pq_commutator_sup(const OscillatorSystem& system, SiteIndex x, SiteIndex y) {
    const auto& spec = system.spectrum();
    const double mx = system.sqrt_mu()(x), my = system.sqrt_mu()(y);
    auto inv_sqrt = [](double s) { return 1.0 / std::sqrt(s); };
    auto one = [](double) { return 1.0; };
    auto sqrt_fn = [](double s) { return std::sqrt(s); };

    const double plain = cluster_abs_sum(spec, one, x, y);
    Eigen::Matrix2d sup;
    sup(0, 0) = mx * my * cluster_abs_sum(spec, inv_sqrt, x, y);
    sup(0, 1) = (mx / my) * plain;
    sup(1, 0) = (my / mx) * plain;
    sup(1, 1) = cluster_abs_sum(spec, sqrt_fn, x, y) / (mx * my);
    return sup;
}

Eigen::Matrix2d pq_commutator_scan(const OscillatorSystem& system, SiteIndex x, SiteIndex y,
                                   double t_max, int points) {
    Eigen::Matrix2d best = Eigen::Matrix2d::Zero();
    for (int i = 0; i < points; ++i) {
        const double t = points > 1 ? t_max * i / (points - 1) : 0.0;
        best = best.cwiseMax(pq_commutator_matrix(system, x, y, t).cwiseAbs());
    }
    return best;
}

}  // namespace oscloc
