#pragma once

#include <cstdint>

namespace oscloc {

/// Stateless counter-based generator. A draw is a pure function of
/// (master seed, realization, site, stream), so any scheduling of
/// realizations over workers reproduces the same numbers.
///
/// Stream 0 is the primary substream; stream 1 is reserved for the
/// single resample allowed per degenerate realization.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t master_seed) noexcept : seed_(master_seed) {}

    std::uint64_t bits(std::uint64_t realization, std::uint64_t site,
                       std::uint64_t stream = 0) const noexcept;

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01(std::uint64_t realization, std::uint64_t site,
                     std::uint64_t stream = 0) const noexcept;

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z) noexcept;

inline constexpr std::uint64_t kPrimaryStream = 0;
inline constexpr std::uint64_t kResampleStream = 1;

}  // namespace oscloc
