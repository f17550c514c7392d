#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace oscloc {

using SiteIndex = Eigen::Index;

enum class Boundary { open, periodic };

/// Unordered nearest-neighbour pair stored with first < second.
struct Edge {
    SiteIndex first;
    SiteIndex second;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A hypercubic box of `side` sites per axis with coordinates
/// `lower, lower + 1, ..., lower + side - 1`. Sites are enumerated
/// lexicographically with the first axis most significant.
class Lattice {
public:
    Lattice(int dimension, int side, int lower, Boundary boundary);

    int dimension() const noexcept { return dimension_; }
    int side() const noexcept { return side_; }
    int lower() const noexcept { return lower_; }
    Boundary boundary() const noexcept { return boundary_; }

    SiteIndex site_count() const noexcept { return site_count_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::vector<int> coordinates(SiteIndex site) const;
    SiteIndex index(const std::vector<int>& coordinates) const;

    /// l1 distance; on a periodic lattice each axis uses the minimum image.
    int distance(SiteIndex a, SiteIndex b) const;

    /// Site closest to the box centre (the origin for [-L, L]^d boxes).
    SiteIndex center() const;

    /// Nearest neighbours of a site, in edge order.
    std::vector<SiteIndex> neighbours(SiteIndex site) const;

private:
    int dimension_;
    int side_;
    int lower_;
    Boundary boundary_;
    SiteIndex site_count_;
    std::vector<Edge> edges_;
};

inline constexpr std::size_t kDefaultMaxSites = 4096;

/// Open box [-L, L]^d. Throws SizeError above `max_sites` sites.
Lattice build_lattice(int dimension, int half_width, std::size_t max_sites = kDefaultMaxSites);

/// Discrete torus with `side` sites per axis (side >= 3), coordinates 0..side-1.
Lattice build_torus(int dimension, int side, std::size_t max_sites = kDefaultMaxSites);

}  // namespace oscloc
