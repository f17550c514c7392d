#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "oscloc/dynamics.hpp"
#include "oscloc/green.hpp"
#include "oscloc/spectral.hpp"
#include "oscloc/states.hpp"
#include "oscloc/system.hpp"

namespace oscloc {

enum class ObservableKind {
    q_correlator,
    weyl_commutator_sup,
    pq_commutator_sup,
    gs_pq_sup,
    thermal_pq_sup,
    static_gs,
    static_thermal,
    green_moment,
};

ObservableKind parse_observable_kind(std::string_view name);
const char* to_string(ObservableKind kind) noexcept;

/// A per-pair scalar observable and the exponent r it is raised to inside
/// each realization. Fields not used by `kind` are ignored.
struct ObservableSpec {
    ObservableKind kind = ObservableKind::q_correlator;
    double alpha = -0.5;
    std::optional<EnergyWindow> window;
    PqEntry entry = PqEntry::qq;
    double beta = 1.0;
    double s = 0.5;
    SpectralParameterZ z{1.0, 0.0};
    /// Coefficients of the single-site symbols f = f_coeff d_x, g = g_coeff d_y.
    std::complex<double> f_coeff{1.0, 0.0};
    std::complex<double> g_coeff{1.0, 0.0};
    double exponent = 1.0;

    /// Throws ConfigError on r outside (0, 1], beta <= 0, s outside (0, 1) or
    /// an empty window.
    void validate() const;
};

/// Evaluates an observable on one realization. Resolvent columns are cached
/// per anchor site, so sweeping y at fixed x costs one factorization.
class ObservableEvaluator {
public:
    ObservableEvaluator(const OscillatorSystem& system, const ObservableSpec& spec);

    /// The observable at (x, y), before the exponent.
    double raw(SiteIndex x, SiteIndex y);
    /// raw(x, y)^r.
    double operator()(SiteIndex x, SiteIndex y);

private:
    const OscillatorSystem& system_;
    const ObservableSpec& spec_;
    std::map<SiteIndex, Eigen::VectorXcd> columns_;
};

}  // namespace oscloc
