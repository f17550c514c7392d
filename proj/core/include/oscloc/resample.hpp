#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "oscloc/errors.hpp"
#include "oscloc/rng.hpp"

namespace oscloc {

/// Runs fn(stream) on the primary stream and, if the draw is degenerate
/// (h not positive definite, or z on the spectrum), once more on the reserved
/// resample stream. Returns the value and whether a redraw happened.
template <class Fn>
auto with_resample(std::uint64_t realization, Fn&& fn) {
    using Result = decltype(fn(kPrimaryStream));
    try {
        return std::pair<Result, bool>(fn(kPrimaryStream), false);
    } catch (const PositivityError&) {
    } catch (const ConditioningError&) {
    }
    try {
        return std::pair<Result, bool>(fn(kResampleStream), true);
    } catch (const NumericalError& e) {
        throw StatisticalValidityError("realization " + std::to_string(realization) +
                                       " is degenerate even after resampling: " + e.what());
    }
}

/// Throws StatisticalValidityError when more than 1% of the realizations
/// needed a redraw.
inline void check_resample_fraction(std::uint64_t resamples, std::uint64_t realizations) {
    if (100 * resamples > realizations) {
        throw StatisticalValidityError(std::to_string(resamples) + " of " +
                                       std::to_string(realizations) +
                                       " realizations needed resampling (limit 1%)");
    }
}

}  // namespace oscloc
