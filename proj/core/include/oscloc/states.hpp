#pragma once

#include <complex>
#include <limits>

#include <Eigen/Core>

#include "oscloc/dynamics.hpp"
#include "oscloc/system.hpp"

namespace oscloc {

/// Inverse temperature. The infinite value selects the ground state.
struct ThermalSpec {
    double beta = std::numeric_limits<double>::infinity();

    static ThermalSpec ground() noexcept { return {}; }
    /// Throws ConfigError unless beta > 0 (infinity allowed).
    static ThermalSpec at(double beta);

    bool is_ground() const noexcept { return beta == std::numeric_limits<double>::infinity(); }
};

/// coth(x) for x > 0, switching to 1/x + x/3 below 1e-4 and to 1 above 20.
double stable_coth(double x) noexcept;

/// Vf = gamma^{-1/2} O^T mu^{1/2} Re f + i gamma^{1/2} O^T mu^{-1/2} Im f.
Eigen::VectorXcd v_map(const OscillatorSystem& system, const WeylSymbol& f);

/// Mode weights coth(beta gamma_k); all ones in the ground state.
Eigen::VectorXd thermal_weights(const OscillatorSystem& system, const ThermalSpec& state);

/// exp(-|Vf|^2 / 4).
double gs_weyl_expectation(const OscillatorSystem& system, const WeylSymbol& f);

/// exp(-(1/4) sum_k coth(beta gamma_k) |(Vf)_k|^2).
double thermal_weyl_expectation(const OscillatorSystem& system, const WeylSymbol& f,
                                const ThermalSpec& state);

/// Re <A Vf_t, Vg> as a mode sum, with Vf_t = exp(2 i gamma t) Vf and A the
/// thermal weights.
double re_weighted_pairing_modes(const OscillatorSystem& system, const WeylSymbol& f,
                                 const WeylSymbol& g, double t, const ThermalSpec& state);

/// The same quantity through the site-space functions
/// phi1 = s^{-1/2} coth cos, phi2 = coth sin, phi3 = s phi1.
double re_weighted_pairing_sites(const OscillatorSystem& system, const WeylSymbol& f,
                                 const WeylSymbol& g, double t, const ThermalSpec& state);

/// <tau_t(W(f)) W(g)> - <W(f)> <W(g)> in the ground state.
std::complex<double> gs_weyl_correlation(const OscillatorSystem& system, const WeylSymbol& f,
                                         const WeylSymbol& g, double t);

/// Thermal counterpart of gs_weyl_correlation.
std::complex<double> thermal_weyl_correlation(const OscillatorSystem& system,
                                              const WeylSymbol& f, const WeylSymbol& g,
                                              double t, const ThermalSpec& state);

/// [[<tau_t(q_x) q_y>, <tau_t(q_x) p_y>], [<tau_t(p_x) q_y>, <tau_t(p_x) p_y>]].
Eigen::Matrix2cd gs_pq_correlations(const OscillatorSystem& system, SiteIndex x, SiteIndex y,
                                    double t);

/// Thermal counterpart of gs_pq_correlations; routes to it in the ground state.
Eigen::Matrix2cd thermal_pq_correlations(const OscillatorSystem& system, SiteIndex x,
                                         SiteIndex y, double t, const ThermalSpec& state);

/// Entrywise sup over t of |thermal_pq_correlations|, as a sum of cluster
/// amplitudes. In the ground state each entry is a single frequency per mode.
Eigen::Matrix2d pq_correlation_sup(const OscillatorSystem& system, SiteIndex x, SiteIndex y,
                                   const ThermalSpec& state = ThermalSpec::ground());

}  // namespace oscloc
