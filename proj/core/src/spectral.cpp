#include "oscloc/spectral.hpp"

#include <Eigen/Eigenvalues>

namespace oscloc {

namespace detail {

void throw_non_finite(double eigenvalue) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "spectral function is not finite at eigenvalue " << eigenvalue;
    throw EvaluationError(msg.str(), eigenvalue);
}

}  // namespace detail

SpectralData::SpectralData(Eigen::VectorXd eigenvalues, Eigen::MatrixXd eigenvectors,
                           double cluster_tolerance)
    : eigenvalues_(std::move(eigenvalues)),
      gamma_(eigenvalues_.cwiseSqrt()),
      eigenvectors_(std::move(eigenvectors)),
      clusters_(cluster_eigenvalues(eigenvalues_, cluster_tolerance)) {}

double SpectralData::representative(std::size_t cluster) const {
    const auto [begin, end] = clusters_.ranges[cluster];
    return eigenvalues_.segment(begin, end - begin).mean();
}

SpectralData diagonalize(const Eigen::MatrixXd& h, double ptol) {
    if (h.rows() != h.cols() || h.rows() == 0) {
        throw ConfigError("diagonalize expects a non-empty square matrix");
    }
    const double scale = h.cwiseAbs().maxCoeff();
    const double asymmetry = (h - h.transpose()).cwiseAbs().maxCoeff();
    if (asymmetry > 1e-12 * scale) {
        std::ostringstream msg;
        msg << "matrix is not symmetric (max asymmetry " << asymmetry << ")";
        throw ConfigError(msg.str());
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("symmetric eigensolver did not converge");
    }
    const Eigen::VectorXd& values = solver.eigenvalues();
    const double norm = values.cwiseAbs().maxCoeff();
    if (values(0) <= ptol * norm) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "h is not positive definite: smallest eigenvalue " << values(0)
            << " <= " << ptol << " * ||h|| = " << ptol * norm;
        throw PositivityError(msg.str(), values(0));
    }
    return SpectralData(values, solver.eigenvectors());
}

EigenvalueClusters cluster_eigenvalues(const Eigen::VectorXd& values, double ctol) {
    EigenvalueClusters clusters;
    const Eigen::Index n = values.size();
    if (n == 0) return clusters;
    const double threshold = ctol * values.cwiseAbs().maxCoeff();
    Eigen::Index begin = 0;
    for (Eigen::Index k = 1; k < n; ++k) {
        if (values(k) - values(k - 1) > threshold || ctol == 0.0) {
            clusters.ranges.emplace_back(begin, k);
            begin = k;
        }
    }
    clusters.ranges.emplace_back(begin, n);
    return clusters;
}

EigenvalueClusters cluster_eigenvalues(const SpectralData& spec, double ctol) {
    return cluster_eigenvalues(spec.eigenvalues(), ctol);
}

double correlator_Q(const SpectralData& spec, double alpha, SiteIndex x, SiteIndex y,
                    const std::optional<EnergyWindow>& window) {
    const auto& o = spec.eigenvectors();
    double total = 0.0;
    for (std::size_t c = 0; c < spec.clusters().size(); ++c) {
        const double energy = spec.representative(c);
        if (window && !window->contains(energy)) continue;
        const auto [begin, end] = spec.clusters().ranges[c];
        double projection = 0.0;
        for (Eigen::Index k = begin; k < end; ++k) {
            projection += o(x, k) * o(y, k);
        }
        total += std::pow(energy, alpha) * std::abs(projection);
    }
    return total;
}

Eigen::VectorXcd attaining_phases(const SpectralData& spec, double /*alpha*/, SiteIndex x,
                                  SiteIndex y) {
    // lambda^alpha > 0, so the optimal phase only depends on the sign of the
    // cluster projection.
    const auto& o = spec.eigenvectors();
    Eigen::VectorXcd phases(spec.size());
    for (const auto& [begin, end] : spec.clusters().ranges) {
        double projection = 0.0;
        for (Eigen::Index k = begin; k < end; ++k) projection += o(x, k) * o(y, k);
        const double sign = projection < 0.0 ? -1.0 : 1.0;
        phases.segment(begin, end - begin).setConstant(sign);
    }
    return phases;
}

}  // namespace oscloc
