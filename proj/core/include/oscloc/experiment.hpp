#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "oscloc/lattice.hpp"
#include "oscloc/model.hpp"
#include "oscloc/observable.hpp"

namespace oscloc {

/// center: x at the lattice centre, y on the coordinate axes through it.
/// all: every ordered pair (x, y).
enum class PairPolicy { center, all };

PairPolicy parse_pair_policy(std::string_view name);
const char* to_string(PairPolicy policy) noexcept;

struct SitePair {
    SiteIndex x;
    SiteIndex y;
    int separation;
};

/// Pairs in a fixed order: by anchor, then by y index.
std::vector<SitePair> site_pairs(const Lattice& lattice, PairPolicy policy);

struct ExperimentConfig {
    ModelConfig model;
    ObservableSpec observable;
    PairPolicy pairs = PairPolicy::center;
    std::uint64_t realizations = 100;
    std::uint64_t seed = 0;
    unsigned workers = 1;

    void validate() const;
};

struct EstimateRow {
    int separation = 0;
    double mean = 0.0;
    double standard_error = 0.0;
    /// realizations times pairs at this separation.
    std::uint64_t count = 0;
};

struct EstimateTable {
    ExperimentConfig config;
    std::vector<EstimateRow> rows;
    std::uint64_t resamples = 0;
};

/// Disorder average of observable^r by separation. Within a realization the
/// pairs sharing a separation are averaged; the realization averages are then
/// accumulated in realization order, so the table is a pure function of the
/// config and does not depend on `workers`.
EstimateTable run_experiment(const ExperimentConfig& config);

}  // namespace oscloc
