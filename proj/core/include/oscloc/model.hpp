#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "oscloc/lattice.hpp"

namespace oscloc {

/// Uniform bounds the parameters are required to respect.
struct ParamBounds {
    double m_min = 0.0;
    double m_max = 0.0;
    double k_max = 0.0;
    double lambda_max = 0.0;
};

/// Masses, spring constants and couplings on a finite lattice.
/// `coupling[e]` belongs to `lattice.edges()[e]`.
struct ModelParams {
    Lattice lattice;
    std::vector<double> mass;
    std::vector<double> spring;
    std::vector<double> coupling;

    /// Bounds read off the actual values.
    ParamBounds observed_bounds() const;

    /// Throws ConfigError unless m > 0, k >= 0, lambda >= 0 and the sizes match.
    void validate() const;
    void validate(const ParamBounds& bounds) const;
};

/// Constant-parameter model; handy for oracles and tests.
ModelParams constant_params(const Lattice& lattice, double mass, double spring, double coupling);

enum class DisorderKind { uniform };
enum class DisorderTarget { spring };

/// i.i.d. disorder on the spring constants: k_x uniform on
/// [spring_lower, spring_lower + width]. Masses and couplings are constant.
struct DisorderSpec {
    DisorderKind kind = DisorderKind::uniform;
    DisorderTarget target = DisorderTarget::spring;
    double spring_lower = 0.0;
    double width = 8.0;
    double mass = 0.5;
    double coupling = 1.0;
    std::uint64_t seed = 0;

    /// width >= 0 (0 is the degenerate, deterministic distribution),
    /// spring_lower >= 0, mass > 0, coupling >= 0.
    void validate() const;

    ParamBounds bounds() const;

    /// Sup norm of the density, 1/W; infinite for W = 0.
    double density_sup() const;
};

/// Lattice geometry plus disorder law: everything needed to draw a realization.
/// Open boundaries use the box [-half_width, half_width]^d; periodic ones a
/// torus with `side` sites per axis.
struct ModelConfig {
    int dimension = 1;
    int half_width = 0;
    int side = 3;
    Boundary boundary = Boundary::open;
    DisorderSpec disorder;
    std::size_t max_sites = kDefaultMaxSites;

    /// Throws ConfigError / SizeError on invalid geometry or disorder.
    void validate() const;
    Lattice lattice() const;
};

/// k_x for every site is drawn from the substream keyed by
/// (seed, realization, site, stream). Pure and bit-reproducible.
ModelParams sample_params(const DisorderSpec& spec, const Lattice& lattice,
                          std::uint64_t realization, std::uint64_t stream = 0);

/// <d_x, h0 d_y>: k_x/2 + sum of incident couplings on the diagonal,
/// -lambda_{xy} on edges.
Eigen::MatrixXd assemble_h0(const ModelParams& params);

/// Diagonal of the mass matrix, 1/(2 m_x).
Eigen::VectorXd mass_matrix(const ModelParams& params);

/// h = mu^{1/2} h0 mu^{1/2} with mu = diag(1/(2 m_x)).
Eigen::MatrixXd assemble_h(const ModelParams& params);

/// (1/(2 m_min)) (4 d lambda_max + k_max / 2).
double norm_bound(const ParamBounds& bounds, int dimension);

}  // namespace oscloc
