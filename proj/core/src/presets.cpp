#include "oscloc/presets.hpp"

#include <string>

#include "oscloc/errors.hpp"

namespace oscloc {

std::vector<std::string_view> preset_names() {
    return {"band_edge_static", "large_disorder", "one_dimensional"};
}

double preset_exponent(std::string_view name, const ObservableSpec& observable) {
    if (name != "one_dimensional") return 1.0;
    switch (observable.kind) {
    case ObservableKind::q_correlator:
    case ObservableKind::weyl_commutator_sup:
    case ObservableKind::green_moment:
        return 0.5;
    default:
        return observable.entry == PqEntry::qq ? 0.5 : 1.0;
    }
}

RunConfig regime_preset(std::string_view name) {
    RunConfig config;
    auto& x = config.experiment;
    x.model.disorder.mass = 0.5;
    x.model.disorder.coupling = 1.0;
    x.model.disorder.spring_lower = 0.0;
    x.realizations = 200;
    x.seed = 1;
    x.pairs = PairPolicy::center;

    if (name == "band_edge_static") {
        x.model.dimension = 2;
        x.model.half_width = 12;
        x.model.disorder.width = 4.0;
        x.observable.kind = ObservableKind::static_gs;
        x.observable.entry = PqEntry::qq;
        config.fit_r_min = 2;
        config.fit_r_max = 10;
    } else if (name == "large_disorder") {
        x.model.dimension = 2;
        x.model.half_width = 10;
        x.model.disorder.width = 32.0;
        x.observable.kind = ObservableKind::weyl_commutator_sup;
        config.fit_r_min = 1;
        config.fit_r_max = 8;
    } else if (name == "one_dimensional") {
        x.model.dimension = 1;
        x.model.half_width = 101;
        x.model.disorder.width = 8.0;
        x.observable.kind = ObservableKind::weyl_commutator_sup;
        config.fit_r_min = 5;
        config.fit_r_max = 40;
    } else {
        throw ConfigError("unknown preset '" + std::string(name) +
                          "' (expected band_edge_static, large_disorder or one_dimensional)");
    }
    x.observable.exponent = preset_exponent(name, x.observable);
    config.output = std::string(name);
    return config;
}

}  // namespace oscloc
