#include "oscloc/observable.hpp"

#include <array>
#include <cmath>

#include "oscloc/errors.hpp"

namespace oscloc {

namespace {

struct KindName {
    ObservableKind kind;
    const char* name;
};

constexpr std::array<KindName, 8> kKindNames{{
    {ObservableKind::q_correlator, "q_correlator"},
    {ObservableKind::weyl_commutator_sup, "weyl_commutator_sup"},
    {ObservableKind::pq_commutator_sup, "pq_commutator_sup"},
    {ObservableKind::gs_pq_sup, "gs_pq_sup"},
    {ObservableKind::thermal_pq_sup, "thermal_pq_sup"},
    {ObservableKind::static_gs, "static_gs"},
    {ObservableKind::static_thermal, "static_thermal"},
    {ObservableKind::green_moment, "green_moment"},
}};

double entry_of(const Eigen::Matrix2d& m, PqEntry entry) {
    const auto [row, col] = matrix_position(entry);
    return m(row, col);
}

double entry_of(const Eigen::Matrix2cd& m, PqEntry entry) {
    const auto [row, col] = matrix_position(entry);
    return std::abs(m(row, col));
}

}  // namespace

ObservableKind parse_observable_kind(std::string_view name) {
    for (const auto& k : kKindNames) {
        if (name == k.name) return k.kind;
    }
    throw ConfigError("unknown observable kind '" + std::string(name) + "'");
}

const char* to_string(ObservableKind kind) noexcept {
    for (const auto& k : kKindNames) {
        if (kind == k.kind) return k.name;
    }
    return "?";
}

void ObservableSpec::validate() const {
    if (!(exponent > 0.0 && exponent <= 1.0)) {
        throw ConfigError("exponent r must lie in (0, 1], got " + std::to_string(exponent));
    }
    if (!std::isfinite(alpha)) throw ConfigError("alpha must be finite");
    if ((kind == ObservableKind::thermal_pq_sup || kind == ObservableKind::static_thermal) &&
        !(beta > 0.0)) {
        throw ConfigError("beta must be positive, got " + std::to_string(beta));
    }
    if (kind == ObservableKind::green_moment) {
        if (!(s > 0.0 && s < 1.0)) {
            throw ConfigError("fractional moment s must lie in (0, 1), got " + std::to_string(s));
        }
        if (!std::isfinite(z.energy) || !std::isfinite(z.epsilon)) {
            throw ConfigError("spectral parameter must be finite");
        }
    }
    if (window && !(window->lower <= window->upper)) {
        throw ConfigError("energy window lower bound exceeds upper bound");
    }
}

ObservableEvaluator::ObservableEvaluator(const OscillatorSystem& system, const ObservableSpec& spec)
    : system_(system), spec_(spec) {}

double ObservableEvaluator::raw(SiteIndex x, SiteIndex y) {
    const auto n = system_.size();
    switch (spec_.kind) {
    case ObservableKind::q_correlator:
        return correlator_Q(system_.spectrum(), spec_.alpha, x, y, spec_.window);
    case ObservableKind::weyl_commutator_sup:
        return weyl_commutator_sup(system_, WeylSymbol::delta(n, x, spec_.f_coeff),
                                   WeylSymbol::delta(n, y, spec_.g_coeff));
    case ObservableKind::pq_commutator_sup:
        return entry_of(pq_commutator_sup(system_, x, y), spec_.entry);
    case ObservableKind::gs_pq_sup:
        return entry_of(pq_correlation_sup(system_, x, y), spec_.entry);
    case ObservableKind::thermal_pq_sup:
        return entry_of(pq_correlation_sup(system_, x, y, ThermalSpec::at(spec_.beta)),
                        spec_.entry);
    case ObservableKind::static_gs:
        return entry_of(gs_pq_correlations(system_, x, y, 0.0), spec_.entry);
    case ObservableKind::static_thermal:
        return entry_of(thermal_pq_correlations(system_, x, y, 0.0, ThermalSpec::at(spec_.beta)),
                        spec_.entry);
    case ObservableKind::green_moment: {
        // (h - z)^{-1} is complex symmetric, so the column at x also gives row x.
        auto it = columns_.find(x);
        if (it == columns_.end()) {
            it = columns_.emplace(x, green_column(system_.h(), x, spec_.z)).first;
        }
        return std::pow(std::abs(it->second(y)), spec_.s);
    }
    }
    throw ConfigError("unsupported observable kind");
}

double ObservableEvaluator::operator()(SiteIndex x, SiteIndex y) {
    const double value = raw(x, y);
    return spec_.exponent == 1.0 ? value : std::pow(value, spec_.exponent);
}

}  // namespace oscloc
