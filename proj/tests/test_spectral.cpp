#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "oscloc/errors.hpp"
#include "oscloc/spectral.hpp"
#include "oscloc/system.hpp"

using namespace oscloc;

namespace {

Eigen::MatrixXd m2() {
    Eigen::MatrixXd h(2, 2);
    h << 2, -1, -1, 2;
    return h;
}

SpectralData random_spectrum(std::mt19937_64& rng) {
    const auto l = oracle::random_lattice(rng);
    return diagonalize(assemble_h(oracle::random_params(rng, l)));
}

}  // namespace

TEST(Diagonalize, SingleSite) {
    const auto spec = diagonalize(Eigen::MatrixXd::Constant(1, 1, 1.0));
    EXPECT_DOUBLE_EQ(spec.eigenvalues()(0), 1.0);
    EXPECT_DOUBLE_EQ(std::abs(spec.eigenvectors()(0, 0)), 1.0);
}

TEST(Diagonalize, TwoByTwo) {
    const auto spec = diagonalize(m2());
    EXPECT_NEAR(spec.eigenvalues()(0), 1.0, 1e-14);
    EXPECT_NEAR(spec.eigenvalues()(1), 3.0, 1e-14);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(spec.eigenvectors()(0, 0)), r, 1e-14);
    EXPECT_NEAR(spec.eigenvectors()(0, 0) * spec.eigenvectors()(1, 0), 0.5, 1e-14);
    EXPECT_NEAR(spec.eigenvectors()(0, 1) * spec.eigenvectors()(1, 1), -0.5, 1e-14);
}

TEST(Diagonalize, KernelIsRejected) {
    Eigen::MatrixXd h(2, 2);
    h << 1, -1, -1, 1;
    try {
        diagonalize(h);
        FAIL() << "expected PositivityError";
    } catch (const PositivityError& e) {
        EXPECT_NEAR(e.eigenvalue(), 0.0, 1e-14);
    }
}

TEST(Diagonalize, AsymmetryIsRejected) {
    Eigen::MatrixXd h = m2();
    h(0, 1) += 1e-6;
    EXPECT_THROW(diagonalize(h), ConfigError);
}

TEST(Diagonalize, InvariantsOnRandomModels) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto l = oracle::random_lattice(rng);
        const Eigen::MatrixXd h = assemble_h(oracle::random_params(rng, l));
        const auto spec = diagonalize(h);
        const auto& o = spec.eigenvectors();
        const auto n = h.rows();
        EXPECT_LE((o.transpose() * o - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
        const Eigen::MatrixXd back = o * spec.eigenvalues().asDiagonal() * o.transpose();
        EXPECT_LE((back - h).cwiseAbs().maxCoeff(), 1e-8 * spec.max_eigenvalue());
        for (Eigen::Index k = 1; k < n; ++k) EXPECT_LE(spec.eigenvalues()(k - 1), spec.eigenvalues()(k));
        EXPECT_GT(spec.min_eigenvalue(), 0.0);
    }
}

TEST(Matel, TwoByTwoExamples) {
    const auto spec = diagonalize(m2());
    EXPECT_NEAR(matel(spec, [](double s) { return s; }, 0, 1), -1.0, 1e-14);
    EXPECT_NEAR(matel(spec, [](double s) { return 1.0 / s; }, 0, 1), 1.0 / 3.0, 1e-14);
    EXPECT_NEAR(matel(spec, [](double) { return 1.0; }, 0, 1), 0.0, 1e-15);
    EXPECT_NEAR(matel(spec, [](double) { return 1.0; }, 1, 1), 1.0, 1e-15);
}

TEST(Matel, NonFiniteValueNamesEigenvalue) {
    const auto spec = diagonalize(m2());
    try {
        matel(spec, [](double s) { return s < 2 ? std::nan("") : 1.0; }, 0, 0);
        FAIL() << "expected EvaluationError";
    } catch (const EvaluationError& e) {
        EXPECT_NEAR(e.eigenvalue(), 1.0, 1e-14);
    }
}

TEST(Matel, LinearityAndSymmetry) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = random_spectrum(rng);
        std::uniform_int_distribution<Eigen::Index> site(0, spec.size() - 1);
        const auto x = site(rng), y = site(rng);
        const double a = u(rng), b = u(rng);
        auto phi = [](double s) { return std::exp(-s); };
        auto psi = [](double s) { return std::sqrt(s); };
        const double lhs = matel(spec, [&](double s) { return a * phi(s) + b * psi(s); }, x, y);
        const double rhs = a * matel(spec, phi, x, y) + b * matel(spec, psi, x, y);
        EXPECT_NEAR(lhs, rhs, 1e-12);
        EXPECT_NEAR(matel(spec, phi, x, y), matel(spec, phi, y, x), 1e-14);
    }
}

TEST(Matel, ComplexFunctionsAndMatrixFunction) {
    const auto spec = diagonalize(m2());
    auto phi = [](double s) { return std::polar(1.0, s); };
    const auto full = matrix_function(spec, phi);
    EXPECT_NEAR(std::abs(full(0, 1) - matel(spec, phi, 0, 1)), 0.0, 1e-15);
    Eigen::VectorXd e1 = Eigen::VectorXd::Unit(2, 1);
    const auto col = apply_function(spec, phi, e1);
    EXPECT_NEAR(std::abs(col(0) - full(0, 1)), 0.0, 1e-15);
}

TEST(Clusters, Examples) {
    Eigen::VectorXd v(2);
    v << 1, 3;
    EXPECT_EQ(cluster_eigenvalues(v, 1e-10).size(), 2u);
    Eigen::VectorXd w(3);
    w << 1, 1 + 1e-14, 3;
    const auto c = cluster_eigenvalues(w, 1e-10);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.ranges[0], (std::pair<Eigen::Index, Eigen::Index>{0, 2}));
    EXPECT_EQ(c.ranges[1], (std::pair<Eigen::Index, Eigen::Index>{2, 3}));
    EXPECT_EQ(cluster_eigenvalues(w, 0.0).size(), 3u);
}

TEST(Clusters, CoverAndRespectSpread) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        // A ring has exact double degeneracies.
        const auto ring = build_torus(1, 12);
        const auto spec = diagonalize(assemble_h(constant_params(ring, 0.7, 1.1, 0.8)), 1e-12);
        Eigen::Index covered = 0;
        for (const auto& [b, e] : spec.clusters().ranges) {
            EXPECT_EQ(b, covered);
            covered = e;
            EXPECT_LE(spec.eigenvalues()(e - 1) - spec.eigenvalues()(b), 1e-10 * spec.max_eigenvalue() * (e - b));
        }
        EXPECT_EQ(covered, spec.size());
        EXPECT_EQ(spec.clusters().size(), 7u);
        (void)rng;
    }
}

TEST(CorrelatorQ, Examples) {
    const auto one = diagonalize(Eigen::MatrixXd::Constant(1, 1, 1.0));
    EXPECT_NEAR(correlator_Q(one, -0.5, 0, 0), 1.0, 1e-15);
    const auto spec = diagonalize(m2());
    EXPECT_NEAR(correlator_Q(spec, 0.0, 0, 1), 1.0, 1e-14);
    EXPECT_NEAR(correlator_Q(spec, -0.5, 0, 1), 0.5 + 0.5 / std::sqrt(3.0), 1e-14);
    EXPECT_NEAR(correlator_Q(spec, -0.5, 0, 1), 0.788675, 1e-6);
}

TEST(CorrelatorQ, DominatesRandomPhasesAndIsAttained) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> alpha_dist(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto spec = random_spectrum(rng);
        std::uniform_int_distribution<Eigen::Index> site(0, spec.size() - 1);
        const auto x = site(rng), y = site(rng);
        const double alpha = alpha_dist(rng);
        const double q = correlator_Q(spec, alpha, x, y);
        Eigen::VectorXcd u(spec.size());
        for (Eigen::Index k = 0; k < spec.size(); ++k) u(k) = std::polar(std::uniform_real_distribution<double>(0, 1)(rng), phase(rng));
        std::complex<double> value = 0.0, attained = 0.0;
        const auto best = attaining_phases(spec, alpha, x, y);
        const auto& o = spec.eigenvectors();
        for (Eigen::Index k = 0; k < spec.size(); ++k) {
            const double w = std::pow(spec.eigenvalues()(k), alpha) * o(x, k) * o(y, k);
            value += u(k) * w;
            attained += best(k) * w;
        }
        EXPECT_LE(std::abs(value), q + 1e-12);
        EXPECT_NEAR(std::abs(attained), q, 1e-12);
        EXPECT_NEAR(q, correlator_Q(spec, alpha, y, x), 1e-14);
    }
}

TEST(CorrelatorQ, WindowPartitionIsAdditive) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = random_spectrum(rng);
        if (spec.size() < 3) continue;
        std::uniform_int_distribution<Eigen::Index> site(0, spec.size() - 1);
        const auto x = site(rng), y = site(rng);
        const double a = spec.min_eigenvalue() - 1.0, c = spec.max_eigenvalue() + 1.0;
        const double b = 0.5 * (spec.eigenvalues()(1) + spec.eigenvalues()(2));
        const EnergyWindow whole{a, c, true, true};
        const EnergyWindow lower{a, b, true, true};
        const EnergyWindow upper{b, c, false, true};
        const double sum = correlator_Q(spec, -0.5, x, y, lower) + correlator_Q(spec, -0.5, x, y, upper);
        EXPECT_NEAR(sum, correlator_Q(spec, -0.5, x, y, whole), 1e-14);
        EXPECT_NEAR(correlator_Q(spec, -0.5, x, y, whole), correlator_Q(spec, -0.5, x, y), 0.0);
    }
}

TEST(CorrelatorQ, DegenerateEigenvaluesUseClusterProjection) {
    // On a ring the cos and sin partners of a degenerate pair cancel in
    // |sum_k O_k(x) O_k(y)| even though each |O_k(x) O_k(y)| may not.
    const auto ring = build_torus(1, 8);
    const auto spec = diagonalize(assemble_h(constant_params(ring, 0.5, 1.0, 1.0)));
    const double q = correlator_Q(spec, 0.0, 0, 2);
    double expected = 0.0;
    for (int j = 0; j <= 4; ++j) {
        const double kappa = 2.0 * std::numbers::pi * j / 8.0;
        const double mult = (j == 0 || j == 4) ? 1.0 : 2.0;
        expected += std::abs(mult * std::cos(2.0 * kappa) / 8.0);
    }
    EXPECT_NEAR(q, expected, 1e-12);
}
