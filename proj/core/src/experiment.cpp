#include "oscloc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "oscloc/errors.hpp"
#include "oscloc/parallel.hpp"
#include "oscloc/resample.hpp"
#include "oscloc/statistics.hpp"
#include "oscloc/system.hpp"

namespace oscloc {

PairPolicy parse_pair_policy(std::string_view name) {
    if (name == "center") return PairPolicy::center;
    if (name == "all") return PairPolicy::all;
    throw ConfigError("unknown pair policy '" + std::string(name) + "' (expected center or all)");
}

const char* to_string(PairPolicy policy) noexcept {
    return policy == PairPolicy::center ? "center" : "all";
}

std::vector<SitePair> site_pairs(const Lattice& lattice, PairPolicy policy) {
    std::vector<SitePair> pairs;
    if (policy == PairPolicy::all) {
        for (SiteIndex x = 0; x < lattice.site_count(); ++x) {
            for (SiteIndex y = 0; y < lattice.site_count(); ++y) {
                pairs.push_back({x, y, lattice.distance(x, y)});
            }
        }
        return pairs;
    }
    const SiteIndex x = lattice.center();
    const auto origin = lattice.coordinates(x);
    std::vector<SiteIndex> ys{x};
    for (int axis = 0; axis < lattice.dimension(); ++axis) {
        for (int step = 1; step < lattice.side(); ++step) {
            for (int sign : {-1, 1}) {
                auto c = origin;
                c[static_cast<std::size_t>(axis)] += sign * step;
                if (lattice.boundary() == Boundary::open) {
                    const int offset = c[static_cast<std::size_t>(axis)] - lattice.lower();
                    if (offset < 0 || offset >= lattice.side()) continue;
                } else if (sign < 0) {
                    // On a ring the forward steps already visit every site.
                    continue;
                }
                ys.push_back(lattice.index(c));
            }
        }
    }
    std::sort(ys.begin(), ys.end());
    for (SiteIndex y : ys) pairs.push_back({x, y, lattice.distance(x, y)});
    return pairs;
}

void ExperimentConfig::validate() const {
    model.validate();
    observable.validate();
    if (realizations < 1) throw ConfigError("realizations must be >= 1");
    if (workers < 1) throw ConfigError("workers must be >= 1");
}

EstimateTable run_experiment(const ExperimentConfig& config) {
    config.validate();
    const Lattice lattice = config.model.lattice();
    const auto pairs = site_pairs(lattice, config.pairs);

    std::map<int, std::uint64_t> pairs_at;
    for (const auto& p : pairs) ++pairs_at[p.separation];
    std::vector<int> separations;
    std::vector<std::uint64_t> counts;
    for (const auto& [sep, count] : pairs_at) {
        separations.push_back(sep);
        counts.push_back(count);
    }
    auto slot_of = [&](int sep) {
        return static_cast<std::size_t>(
            std::lower_bound(separations.begin(), separations.end(), sep) - separations.begin());
    };

    DisorderSpec disorder = config.model.disorder;
    disorder.seed = config.seed;

    auto draws = parallel_map(config.realizations, config.workers, [&](std::size_t r) {
        return with_resample(r, [&](std::uint64_t stream) {
            const OscillatorSystem system(sample_params(disorder, lattice, r, stream));
            ObservableEvaluator evaluate(system, config.observable);
            std::vector<double> sums(separations.size(), 0.0);
            for (const auto& p : pairs) sums[slot_of(p.separation)] += evaluate(p.x, p.y);
            for (std::size_t i = 0; i < sums.size(); ++i) {
                sums[i] /= static_cast<double>(counts[i]);
            }
            return sums;
        });
    });

    std::vector<RunningMean> acc(separations.size());
    EstimateTable table{config, {}, 0};
    for (const auto& [means, resampled] : draws) {
        table.resamples += resampled ? 1 : 0;
        for (std::size_t i = 0; i < means.size(); ++i) acc[i].add(means[i]);
    }
    check_resample_fraction(table.resamples, config.realizations);

    for (std::size_t i = 0; i < separations.size(); ++i) {
        EstimateRow row;
        row.separation = separations[i];
        row.mean = acc[i].mean();
        row.standard_error = acc[i].standard_error();
        row.count = config.realizations * counts[i];
        if (!std::isfinite(row.mean)) {
            throw NumericalError("non-finite mean at separation " + std::to_string(row.separation));
        }
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace oscloc
