#pragma once

#include <string_view>
#include <vector>

#include "oscloc/config.hpp"

namespace oscloc {

/// Names accepted by regime_preset.
std::vector<std::string_view> preset_names();

/// Ready-to-run configurations for the three localization regimes:
///
///  - band_edge_static: d = 2, L = 12, W = 4, static ground-state qq, r = 1.
///  - large_disorder: d = 2, L = 10, W = 32, Weyl commutator sup, r = 1.
///  - one_dimensional: d = 1, L = 101, W = 8, Weyl commutator sup, r = 1/2.
///
/// All use m = 1/2, lambda = 1, springs uniform on [0, W] and N = 200.
/// Throws ConfigError for an unknown name.
RunConfig regime_preset(std::string_view name);

/// The exponent a preset prescribes for an observable: in one_dimensional,
/// 1/2 for Weyl, correlator and qq-type quantities and 1 for anything
/// involving a momentum; 1 in the other regimes.
double preset_exponent(std::string_view name, const ObservableSpec& observable);

}  // namespace oscloc
