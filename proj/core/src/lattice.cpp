#include "oscloc/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "oscloc/errors.hpp"

namespace oscloc {

namespace {

SiteIndex checked_site_count(int dimension, int side, std::size_t max_sites) {
    if (dimension < 1) {
        throw ConfigError("lattice dimension must be >= 1, got " + std::to_string(dimension));
    }
    if (side < 1) {
        throw ConfigError("lattice side must be >= 1, got " + std::to_string(side));
    }
    std::size_t count = 1;
    for (int axis = 0; axis < dimension; ++axis) {
        count *= static_cast<std::size_t>(side);
        if (count > max_sites) {
            throw SizeError("lattice with side " + std::to_string(side) + " in dimension " +
                            std::to_string(dimension) + " exceeds the maximum of " +
                            std::to_string(max_sites) + " sites");
        }
    }
    return static_cast<SiteIndex>(count);
}

}  // namespace

Lattice::Lattice(int dimension, int side, int lower, Boundary boundary)
    : dimension_(dimension), side_(side), lower_(lower), boundary_(boundary),
      site_count_(checked_site_count(dimension, side, static_cast<std::size_t>(-1))) {
    if (boundary_ == Boundary::periodic && side_ < 3) {
        throw ConfigError("periodic lattice needs side >= 3, got " + std::to_string(side_));
    }
    std::vector<int> coords;
    for (SiteIndex site = 0; site < site_count_; ++site) {
        coords = coordinates(site);
        for (int axis = 0; axis < dimension_; ++axis) {
            int offset = coords[axis] - lower_;
            if (offset + 1 < side_) {
                auto next = coords;
                next[axis] += 1;
                edges_.push_back({site, index(next)});
            } else if (boundary_ == Boundary::periodic) {
                auto wrapped = coords;
                wrapped[axis] = lower_;
                SiteIndex other = index(wrapped);
                edges_.push_back({std::min(site, other), std::max(site, other)});
            }
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
}

std::vector<int> Lattice::coordinates(SiteIndex site) const {
    std::vector<int> coords(static_cast<std::size_t>(dimension_));
    for (int axis = dimension_ - 1; axis >= 0; --axis) {
        coords[static_cast<std::size_t>(axis)] = lower_ + static_cast<int>(site % side_);
        site /= side_;
    }
    return coords;
}

SiteIndex Lattice::index(const std::vector<int>& coordinates) const {
    SiteIndex site = 0;
    for (int axis = 0; axis < dimension_; ++axis) {
        int offset = coordinates[static_cast<std::size_t>(axis)] - lower_;
        if (boundary_ == Boundary::periodic) {
            offset = ((offset % side_) + side_) % side_;
        } else if (offset < 0 || offset >= side_) {
            throw ConfigError("coordinate outside the lattice box");
        }
        site = site * side_ + offset;
    }
    return site;
}

int Lattice::distance(SiteIndex a, SiteIndex b) const {
    auto ca = coordinates(a);
    auto cb = coordinates(b);
    int total = 0;
    for (int axis = 0; axis < dimension_; ++axis) {
        int delta = std::abs(ca[static_cast<std::size_t>(axis)] - cb[static_cast<std::size_t>(axis)]);
        if (boundary_ == Boundary::periodic) {
            delta = std::min(delta, side_ - delta);
        }
        total += delta;
    }
    return total;
}

SiteIndex Lattice::center() const {
    std::vector<int> coords(static_cast<std::size_t>(dimension_), lower_ + side_ / 2);
    return index(coords);
}

std::vector<SiteIndex> Lattice::neighbours(SiteIndex site) const {
    std::vector<SiteIndex> out;
    for (const auto& e : edges_) {
        if (e.first == site) out.push_back(e.second);
        else if (e.second == site) out.push_back(e.first);
    }
    return out;
}

Lattice build_lattice(int dimension, int half_width, std::size_t max_sites) {
    if (half_width < 0) {
        throw ConfigError("half-width L must be >= 0, got " + std::to_string(half_width));
    }
    int side = 2 * half_width + 1;
    checked_site_count(dimension, side, max_sites);
    return Lattice(dimension, side, -half_width, Boundary::open);
}

Lattice build_torus(int dimension, int side, std::size_t max_sites) {
    checked_site_count(dimension, side, max_sites);
    return Lattice(dimension, side, 0, Boundary::periodic);
}

}  // namespace oscloc
