#include "oscloc/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oscloc/errors.hpp"
#include "oscloc/rng.hpp"

namespace oscloc {

ParamBounds ModelParams::observed_bounds() const {
    ParamBounds b;
    b.m_min = *std::min_element(mass.begin(), mass.end());
    b.m_max = *std::max_element(mass.begin(), mass.end());
    b.k_max = *std::max_element(spring.begin(), spring.end());
    b.lambda_max = coupling.empty() ? 0.0 : *std::max_element(coupling.begin(), coupling.end());
    return b;
}

void ModelParams::validate() const {
    auto n = static_cast<std::size_t>(lattice.site_count());
    if (mass.size() != n || spring.size() != n || coupling.size() != lattice.edges().size()) {
        throw ConfigError("model parameter arrays do not match the lattice");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(mass[i] > 0.0) || !std::isfinite(mass[i])) {
            throw ConfigError("mass at site " + std::to_string(i) + " must be positive and finite");
        }
        if (!(spring[i] >= 0.0) || !std::isfinite(spring[i])) {
            throw ConfigError("spring constant at site " + std::to_string(i) +
                              " must be non-negative and finite");
        }
    }
    for (std::size_t e = 0; e < coupling.size(); ++e) {
        if (!(coupling[e] >= 0.0) || !std::isfinite(coupling[e])) {
            throw ConfigError("coupling on edge " + std::to_string(e) +
                              " must be non-negative and finite");
        }
    }
}

void ModelParams::validate(const ParamBounds& bounds) const {
    validate();
    auto observed = observed_bounds();
    if (observed.m_min < bounds.m_min || observed.m_max > bounds.m_max ||
        observed.k_max > bounds.k_max || observed.lambda_max > bounds.lambda_max) {
        throw ConfigError("model parameters violate the configured bounds");
    }
}

ModelParams constant_params(const Lattice& lattice, double mass, double spring, double coupling) {
    auto n = static_cast<std::size_t>(lattice.site_count());
    ModelParams params{lattice, std::vector<double>(n, mass), std::vector<double>(n, spring),
                       std::vector<double>(lattice.edges().size(), coupling)};
    params.validate();
    return params;
}

void DisorderSpec::validate() const {
    if (!(width >= 0.0) || !std::isfinite(width)) {
        throw ConfigError("disorder width W must be >= 0, got " + std::to_string(width));
    }
    if (!(spring_lower >= 0.0) || !std::isfinite(spring_lower)) {
        throw ConfigError("spring lower bound must be >= 0, got " + std::to_string(spring_lower));
    }
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw ConfigError("mass must be > 0, got " + std::to_string(mass));
    }
    if (!(coupling >= 0.0) || !std::isfinite(coupling)) {
        throw ConfigError("coupling must be >= 0, got " + std::to_string(coupling));
    }
}

void ModelConfig::validate() const {
    disorder.validate();
    (void)lattice();
}

Lattice ModelConfig::lattice() const {
    if (dimension < 1 || dimension > 3) {
        throw ConfigError("dimension must be 1, 2 or 3, got " + std::to_string(dimension));
    }
    if (boundary == Boundary::periodic) return build_torus(dimension, side, max_sites);
    return build_lattice(dimension, half_width, max_sites);
}

ParamBounds DisorderSpec::bounds() const {
    return {mass, mass, spring_lower + width, coupling};
}

double DisorderSpec::density_sup() const {
    return width > 0.0 ? 1.0 / width : std::numeric_limits<double>::infinity();
}

ModelParams sample_params(const DisorderSpec& spec, const Lattice& lattice,
                          std::uint64_t realization, std::uint64_t stream) {
    spec.validate();
    auto n = static_cast<std::size_t>(lattice.site_count());
    CounterRng rng(spec.seed);
    std::vector<double> spring(n);
    for (std::size_t site = 0; site < n; ++site) {
        spring[site] = spec.spring_lower + spec.width * rng.uniform01(realization, site, stream);
    }
    return ModelParams{lattice, std::vector<double>(n, spec.mass), std::move(spring),
                       std::vector<double>(lattice.edges().size(), spec.coupling)};
}

Eigen::MatrixXd assemble_h0(const ModelParams& params) {
    params.validate();
    const auto n = params.lattice.site_count();
    Eigen::MatrixXd h0 = Eigen::MatrixXd::Zero(n, n);
    for (SiteIndex x = 0; x < n; ++x) {
        h0(x, x) = 0.5 * params.spring[static_cast<std::size_t>(x)];
    }
    const auto& edges = params.lattice.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const double lam = params.coupling[e];
        const auto [x, y] = edges[e];
        h0(x, x) += lam;
        h0(y, y) += lam;
        h0(x, y) -= lam;
        h0(y, x) -= lam;
    }
    return h0;
}

Eigen::VectorXd mass_matrix(const ModelParams& params) {
    Eigen::VectorXd mu(params.lattice.site_count());
    for (SiteIndex x = 0; x < mu.size(); ++x) {
        mu(x) = 1.0 / (2.0 * params.mass[static_cast<std::size_t>(x)]);
    }
    return mu;
}

Eigen::MatrixXd assemble_h(const ModelParams& params) {
    Eigen::MatrixXd h = assemble_h0(params);
    const auto n = h.rows();
    for (Eigen::Index y = 0; y < n; ++y) {
        for (Eigen::Index x = 0; x < n; ++x) {
            if (h(x, y) == 0.0) continue;
            const double mx = params.mass[static_cast<std::size_t>(x)];
            const double my = params.mass[static_cast<std::size_t>(y)];
            h(x, y) /= x == y ? 2.0 * mx : 2.0 * std::sqrt(mx * my);
        }
    }
    return h;
}

double norm_bound(const ParamBounds& bounds, int dimension) {
    return (4.0 * dimension * bounds.lambda_max + 0.5 * bounds.k_max) / (2.0 * bounds.m_min);
}

}  // namespace oscloc
