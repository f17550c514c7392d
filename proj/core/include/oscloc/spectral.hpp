#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <sstream>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "oscloc/errors.hpp"
#include "oscloc/lattice.hpp"

namespace oscloc {

/// Maximal runs of eigenvalue indices whose consecutive gaps are within
/// ctol * max eigenvalue. `ranges[c]` is the half-open index range of cluster c.
struct EigenvalueClusters {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> ranges;

    std::size_t size() const noexcept { return ranges.size(); }
};

inline constexpr double kDefaultClusterTolerance = 1e-10;
inline constexpr double kDefaultPositivityTolerance = 1e-12;

/// Eigen-decomposition h = O diag(gamma^2) O^T with all gamma^2 > 0,
/// ascending. Column k of `eigenvectors` belongs to `eigenvalues[k]`.
class SpectralData {
public:
    SpectralData(Eigen::VectorXd eigenvalues, Eigen::MatrixXd eigenvectors,
                 double cluster_tolerance = kDefaultClusterTolerance);

    Eigen::Index size() const noexcept { return eigenvalues_.size(); }

    /// gamma_k^2.
    const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
    /// gamma_k = +sqrt(gamma_k^2).
    const Eigen::VectorXd& gamma() const noexcept { return gamma_; }
    /// O; O(x, k) is the x-component of eigenvector k.
    const Eigen::MatrixXd& eigenvectors() const noexcept { return eigenvectors_; }
    const EigenvalueClusters& clusters() const noexcept { return clusters_; }

    /// Mean eigenvalue of a cluster.
    double representative(std::size_t cluster) const;

    double max_eigenvalue() const noexcept { return eigenvalues_(eigenvalues_.size() - 1); }
    double min_eigenvalue() const noexcept { return eigenvalues_(0); }

private:
    Eigen::VectorXd eigenvalues_;
    Eigen::VectorXd gamma_;
    Eigen::MatrixXd eigenvectors_;
    EigenvalueClusters clusters_;
};

/// Dense symmetric eigensolve. Throws ConfigError when h is not symmetric
/// to 1e-12 relative, PositivityError when the smallest eigenvalue is
/// <= ptol * ||h||.
SpectralData diagonalize(const Eigen::MatrixXd& h, double ptol = kDefaultPositivityTolerance);

EigenvalueClusters cluster_eigenvalues(const Eigen::VectorXd& ascending_eigenvalues, double ctol);
EigenvalueClusters cluster_eigenvalues(const SpectralData& spec, double ctol);

namespace detail {

template <class T>
bool finite_value(const T& v) {
    if constexpr (std::is_arithmetic_v<T>) {
        return std::isfinite(v);
    } else {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    }
}

[[noreturn]] void throw_non_finite(double eigenvalue);

}  // namespace detail

/// Evaluates phi at every eigenvalue, throwing EvaluationError on the first
/// non-finite value.
template <class Fn>
auto spectral_values(const SpectralData& spec, Fn&& phi) {
    using Value = std::decay_t<decltype(phi(0.0))>;
    Eigen::Matrix<Value, Eigen::Dynamic, 1> values(spec.size());
    for (Eigen::Index k = 0; k < spec.size(); ++k) {
        const double s = spec.eigenvalues()(k);
        values(k) = phi(s);
        if (!detail::finite_value(values(k))) detail::throw_non_finite(s);
    }
    return values;
}

/// <d_x, phi(h) d_y> = sum_k O_k(x) phi(gamma_k^2) O_k(y).
template <class Fn>
auto matel(const SpectralData& spec, Fn&& phi, SiteIndex x, SiteIndex y) {
    auto values = spectral_values(spec, std::forward<Fn>(phi));
    using Value = typename decltype(values)::Scalar;
    const auto& o = spec.eigenvectors();
    Value sum{0};
    for (Eigen::Index k = 0; k < spec.size(); ++k) {
        sum += o(x, k) * values(k) * o(y, k);
    }
    return sum;
}

/// phi(h) v.
template <class Fn, class Derived>
auto apply_function(const SpectralData& spec, Fn&& phi, const Eigen::MatrixBase<Derived>& v) {
    auto values = spectral_values(spec, std::forward<Fn>(phi));
    using Value = typename decltype(values)::Scalar;
    using Scalar = std::conditional_t<std::is_same_v<Value, double>, typename Derived::Scalar,
                                      std::complex<double>>;
    const auto& o = spec.eigenvectors();
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> modes = o.transpose().template cast<Scalar>() *
                                                     v.template cast<Scalar>();
    modes.array() *= values.template cast<Scalar>().array();
    return Eigen::Matrix<Scalar, Eigen::Dynamic, 1>(o.template cast<Scalar>() * modes);
}

/// Full matrix phi(h).
template <class Fn>
auto matrix_function(const SpectralData& spec, Fn&& phi) {
    auto values = spectral_values(spec, std::forward<Fn>(phi));
    using Value = typename decltype(values)::Scalar;
    Eigen::Matrix<Value, Eigen::Dynamic, Eigen::Dynamic> o = spec.eigenvectors().template cast<Value>();
    return Eigen::Matrix<Value, Eigen::Dynamic, Eigen::Dynamic>(o * values.asDiagonal() *
                                                                o.transpose());
}

/// Energy window for eigenfunction correlators. A cluster contributes when
/// its representative eigenvalue lies inside, so any split of a window into
/// adjacent pieces partitions the clusters.
struct EnergyWindow {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    bool include_lower = true;
    bool include_upper = true;

    bool contains(double energy) const noexcept {
        bool above = include_lower ? energy >= lower : energy > lower;
        bool below = include_upper ? energy <= upper : energy < upper;
        return above && below;
    }
};

/// sup over |u| <= 1 of |<d_x, h^alpha u(h) chi_window(h) d_y>|, evaluated in
/// closed form as sum over clusters c in the window of
/// lambda_c^alpha |sum_{k in c} O_k(x) O_k(y)|.
double correlator_Q(const SpectralData& spec, double alpha, SiteIndex x, SiteIndex y,
                    const std::optional<EnergyWindow>& window = std::nullopt);

/// sum over clusters c of |sum_{k in c} w(gamma_k^2) O_k(x) O_k(y)|. This is
/// sup_t |sum_k w_k O_k(x) O_k(y) e^{i omega_k t}| whenever the cluster
/// frequencies are rationally independent, and an upper bound always.
template <class Fn>
double cluster_abs_sum(const SpectralData& spec, Fn&& weight, SiteIndex x, SiteIndex y) {
    auto values = spectral_values(spec, std::forward<Fn>(weight));
    const auto& o = spec.eigenvectors();
    double total = 0.0;
    for (const auto& [begin, end] : spec.clusters().ranges) {
        double projection = 0.0;
        for (Eigen::Index k = begin; k < end; ++k) projection += values(k) * o(x, k) * o(y, k);
        total += std::abs(projection);
    }
    return total;
}

/// Phase function attaining the supremum in correlator_Q: one unit phase per
/// eigenvalue, constant on clusters.
Eigen::VectorXcd attaining_phases(const SpectralData& spec, double alpha, SiteIndex x, SiteIndex y);

}  // namespace oscloc
