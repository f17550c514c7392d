#include "oscloc/rng.hpp"

namespace oscloc {

std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t CounterRng::bits(std::uint64_t realization, std::uint64_t site,
                               std::uint64_t stream) const noexcept {
    // Each key component passes through its own mixing round so that
    // neighbouring counters land far apart.
    std::uint64_t h = mix64(seed_);
    h = mix64(h ^ (realization * 0xd1b54a32d192ed03ULL));
    h = mix64(h ^ (site * 0x8cb92ba72f3d8dd7ULL));
    h = mix64(h ^ (stream * 0xa0761d6478bd642fULL + 0x2545f4914f6cdd1dULL));
    return h;
}

double CounterRng::uniform01(std::uint64_t realization, std::uint64_t site,
                             std::uint64_t stream) const noexcept {
    return static_cast<double>(bits(realization, site, stream) >> 11) * 0x1.0p-53;
}

}  // namespace oscloc
