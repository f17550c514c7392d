#include "oscloc/system.hpp"

namespace oscloc {

OscillatorSystem::OscillatorSystem(ModelParams params, double ptol)
    : params_(std::move(params)),
      h_(assemble_h(params_)),
      spectrum_(diagonalize(h_, ptol)),
      sqrt_mu_(mass_matrix(params_).cwiseSqrt()),
      inv_sqrt_mu_(sqrt_mu_.cwiseInverse()) {}

Eigen::MatrixXd symplectic_transform(const OscillatorSystem& system) {
    const auto n = system.size();
    const auto& o = system.spectrum().eigenvectors();
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    s.topLeftCorner(n, n) = system.sqrt_mu().asDiagonal() * o;
    s.bottomRightCorner(n, n) = system.inv_sqrt_mu().asDiagonal() * o;
    return s;
}

Eigen::MatrixXd symplectic_form(Eigen::Index n) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    j.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    return j;
}

}  // namespace oscloc
