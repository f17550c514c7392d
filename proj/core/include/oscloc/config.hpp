#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oscloc/experiment.hpp"

namespace oscloc {

/// Everything a run needs: model, observable, execution and fit window.
///
/// Text format: `[model]`, `[observable]`, `[execution]` and `[fit]`
/// sections of `key = value` lines; `#` starts a comment. Every key is
/// optional and defaults to the value printed by echo_config.
struct RunConfig {
    ExperimentConfig experiment;
    int fit_r_min = 5;
    int fit_r_max = 40;
    std::string output = "oscloc-run";
};

/// Parses and validates a config. `overrides` are `section.key=value`
/// strings applied after the text. Unknown keys, malformed values and
/// violated constraints raise ConfigError naming the key and line.
RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

/// Canonical text with every key written out; parse_config(echo_config(c))
/// reproduces c exactly.
std::string echo_config(const RunConfig& config);

}  // namespace oscloc
