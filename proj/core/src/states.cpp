#include "oscloc/states.hpp"

#include <cmath>

#include "oscloc/errors.hpp"

namespace oscloc {

namespace {

using namespace std::complex_literals;

struct ModeCoordinates {
    Eigen::ArrayXd re;
    Eigen::ArrayXd im;
};

ModeCoordinates mode_coordinates(const OscillatorSystem& system, const WeylSymbol& f) {
    const auto& o = system.spectrum().eigenvectors();
    return {(o.transpose() * system.sqrt_mu().cwiseProduct(f.position_part())).array(),
            (o.transpose() * system.inv_sqrt_mu().cwiseProduct(f.momentum_part())).array()};
}

double coth_at(const ThermalSpec& state, double gamma) {
    return state.is_ground() ? 1.0 : stable_coth(state.beta * gamma);
}

std::complex<double> weyl_correlation(const OscillatorSystem& system, const WeylSymbol& f,
                                      const WeylSymbol& g, double t, const ThermalSpec& state) {
    const Eigen::ArrayXd weights = thermal_weights(system, state).array();
    const double norm_f = (weights * v_map(system, f).array().abs2()).sum();
    const double norm_g = (weights * v_map(system, g).array().abs2()).sum();
    const double theta = im_pairing(system, f, g, t);
    const double re = re_weighted_pairing_modes(system, f, g, t, state);
    const std::complex<double> phase = std::exp(-0.5i * theta) * std::exp(-0.5 * re);
    return (phase - 1.0) * std::exp(-0.25 * (norm_f + norm_g));
}

struct PqPrefactors {
    double qq, qp, pq, pp;
};

PqPrefactors prefactors(const OscillatorSystem& system, SiteIndex x, SiteIndex y) {
    const double mx = system.mass(x), my = system.mass(y);
    return {0.25 / std::sqrt(mx * my), 0.5 * std::sqrt(my / mx), 0.5 * std::sqrt(mx / my),
            std::sqrt(mx * my)};
}

}  // namespace

ThermalSpec ThermalSpec::at(double beta) {
    if (!(beta > 0.0)) throw ConfigError("beta must be positive, got " + std::to_string(beta));
    return {beta};
}

double stable_coth(double x) noexcept {
    if (x < 1e-4) return 1.0 / x + x / 3.0;
    if (x > 20.0) return 1.0;
    return 1.0 / std::tanh(x);
}

Eigen::VectorXcd v_map(const OscillatorSystem& system, const WeylSymbol& f) {
    const auto modes = mode_coordinates(system, f);
    const Eigen::ArrayXd gamma = system.spectrum().gamma().array();
    Eigen::VectorXcd v(gamma.size());
    v.real() = (modes.re / gamma.sqrt()).matrix();
    v.imag() = (modes.im * gamma.sqrt()).matrix();
    return v;
}

Eigen::VectorXd thermal_weights(const OscillatorSystem& system, const ThermalSpec& state) {
    const auto& gamma = system.spectrum().gamma();
    Eigen::VectorXd w(gamma.size());
    for (Eigen::Index k = 0; k < gamma.size(); ++k) w(k) = coth_at(state, gamma(k));
    return w;
}

double gs_weyl_expectation(const OscillatorSystem& system, const WeylSymbol& f) {
    return std::exp(-0.25 * v_map(system, f).squaredNorm());
}

double thermal_weyl_expectation(const OscillatorSystem& system, const WeylSymbol& f,
                                const ThermalSpec& state) {
    if (state.is_ground()) return gs_weyl_expectation(system, f);
    const Eigen::ArrayXd weights = thermal_weights(system, state).array();
    return std::exp(-0.25 * (weights * v_map(system, f).array().abs2()).sum());
}

double re_weighted_pairing_modes(const OscillatorSystem& system, const WeylSymbol& f,
                                 const WeylSymbol& g, double t, const ThermalSpec& state) {
    const Eigen::VectorXcd vf = v_map(system, f);
    const Eigen::VectorXcd vg = v_map(system, g);
    const Eigen::ArrayXd gamma = system.spectrum().gamma().array();
    const Eigen::ArrayXd weights = thermal_weights(system, state).array();
    double total = 0.0;
    for (Eigen::Index k = 0; k < gamma.size(); ++k) {
        const std::complex<double> vft = std::polar(1.0, 2.0 * gamma(k) * t) * vf(k);
        total += weights(k) * std::real(std::conj(vft) * vg(k));
    }
    return total;
}

double re_weighted_pairing_sites(const OscillatorSystem& system, const WeylSymbol& f,
                                 const WeylSymbol& g, double t, const ThermalSpec& state) {
    const auto& spec = system.spectrum();
    auto coth = [&](double s) { return coth_at(state, std::sqrt(s)); };
    auto phi1 = [&](double s) { return coth(s) * std::cos(2.0 * t * std::sqrt(s)) / std::sqrt(s); };
    auto phi2 = [&](double s) { return coth(s) * std::sin(2.0 * t * std::sqrt(s)); };
    auto phi3 = [&](double s) { return s * phi1(s); };

    const Eigen::VectorXd re_f = system.sqrt_mu().cwiseProduct(f.position_part());
    const Eigen::VectorXd im_f = system.inv_sqrt_mu().cwiseProduct(f.momentum_part());
    const Eigen::VectorXd re_g = system.sqrt_mu().cwiseProduct(g.position_part());
    const Eigen::VectorXd im_g = system.inv_sqrt_mu().cwiseProduct(g.momentum_part());

    const Eigen::MatrixXd m1 = matrix_function(spec, phi1);
    const Eigen::MatrixXd m2 = matrix_function(spec, phi2);
    const Eigen::MatrixXd m3 = matrix_function(spec, phi3);
    return re_f.dot(m1 * re_g) - im_f.dot(m2 * re_g) + re_f.dot(m2 * im_g) + im_f.dot(m3 * im_g);
}

std::complex<double> gs_weyl_correlation(const OscillatorSystem& system, const WeylSymbol& f,
                                         const WeylSymbol& g, double t) {
    return weyl_correlation(system, f, g, t, ThermalSpec::ground());
}

std::complex<double> thermal_weyl_correlation(const OscillatorSystem& system,
                                              const WeylSymbol& f, const WeylSymbol& g,
                                              double t, const ThermalSpec& state) {
    return weyl_correlation(system, f, g, t, state);
}

Eigen::Matrix2cd gs_pq_correlations(const OscillatorSystem& system, SiteIndex x, SiteIndex y,
                                    double t) {
    const auto& spec = system.spectrum();
    const auto c = prefactors(system, x, y);
    auto wave = [t](double s) { return std::polar(1.0, -2.0 * t * std::sqrt(s)); };
    auto inv_wave = [&](double s) { return wave(s) / std::sqrt(s); };
    auto sqrt_wave = [&](double s) { return wave(s) * std::sqrt(s); };

    const std::complex<double> plain = matel(spec, wave, x, y);
    Eigen::Matrix2cd out;
    out(0, 0) = c.qq * matel(spec, inv_wave, x, y);
    out(0, 1) = 1i * c.qp * plain;
    out(1, 0) = -1i * c.pq * plain;
    out(1, 1) = c.pp * matel(spec, sqrt_wave, x, y);
    return out;
}

Eigen::Matrix2cd thermal_pq_correlations(const OscillatorSystem& system, SiteIndex x,
                                         SiteIndex y, double t, const ThermalSpec& state) {
    if (state.is_ground()) return gs_pq_correlations(system, x, y, t);
    const auto& spec = system.spectrum();
    const auto c = prefactors(system, x, y);
    const double beta = state.beta;
    // coth cos - i sin, the common mode profile of all four entries.
    auto profile = [beta, t](double s) {
        const double w = std::sqrt(s);
        return std::complex<double>(stable_coth(beta * w) * std::cos(2.0 * t * w),
                                    -std::sin(2.0 * t * w));
    };
    auto qq = [&](double s) { return profile(s) / std::sqrt(s); };
    auto mixed = [beta, t](double s) {
        const double w = std::sqrt(s);
        return std::complex<double>(std::cos(2.0 * t * w),
                                    -stable_coth(beta * w) * std::sin(2.0 * t * w));
    };
    auto pp = [&](double s) { return profile(s) * std::sqrt(s); };

    const std::complex<double> plain = matel(spec, mixed, x, y);
    Eigen::Matrix2cd out;
    out(0, 0) = c.qq * matel(spec, qq, x, y);
    out(0, 1) = 1i * c.qp * plain;
    out(1, 0) = -1i * c.pq * plain;
    out(1, 1) = c.pp * matel(spec, pp, x, y);
    return out;
}

Eigen::Matrix2d pq_correlation_sup(const OscillatorSystem& system, SiteIndex x, SiteIndex y,
                                   const ThermalSpec& state) {
    const auto& spec = system.spectrum();
    const auto& o = spec.eigenvectors();
    const auto& gamma = spec.gamma();
    const auto c = prefactors(system, x, y);
    const Eigen::VectorXd coth = thermal_weights(system, state);

    // Each entry is sum_k w_k O_k(x) O_k(y) (P_k e^{-2i gamma_k t} + N_k e^{2i gamma_k t})
    // with P_k = (coth_k + 1) / 2 and N_k = (coth_k - 1) / 2.
    auto amplitude = [&](auto&& weight) {
        double total = 0.0;
        for (const auto& [begin, end] : spec.clusters().ranges) {
            double forward = 0.0, backward = 0.0;
            for (Eigen::Index k = begin; k < end; ++k) {
                const double base = weight(gamma(k)) * o(x, k) * o(y, k);
                forward += 0.5 * (coth(k) + 1.0) * base;
                backward += 0.5 * (coth(k) - 1.0) * base;
            }
            total += std::abs(forward) + std::abs(backward);
        }
        return total;
    };

    const double plain = amplitude([](double) { return 1.0; });
    Eigen::Matrix2d sup;
    sup(0, 0) = c.qq * amplitude([](double g) { return 1.0 / g; });
    sup(0, 1) = c.qp * plain;
    sup(1, 0) = c.pq * plain;
    sup(1, 1) = c.pp * amplitude([](double g) { return g; });
    return sup;
}

}  // namespace oscloc
