#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "oscloc/errors.hpp"
#include "oscloc/green.hpp"
#include "oscloc/spectral.hpp"

using namespace oscloc;
using namespace std::complex_literals;

namespace {

Eigen::MatrixXd random_h(std::mt19937_64& rng) {
    return assemble_h(oracle::random_params(rng, oracle::random_lattice(rng)));
}

ModelConfig chain(int half_width, double width, double lower = 0.0) {
    ModelConfig m;
    m.dimension = 1;
    m.half_width = half_width;
    m.disorder.width = width;
    m.disorder.spring_lower = lower;
    return m;
}

}  // namespace

TEST(GreenFunction, ScalarResolvent) {
    const Eigen::MatrixXd h = Eigen::MatrixXd::Constant(1, 1, 1.0);
    const auto g = green_function(h, 0, 0, {0.0, 1.0});
    EXPECT_NEAR(std::abs(g - (0.5 + 0.5i)), 0.0, 1e-15);
}

TEST(GreenFunction, TwoByTwoInverse) {
    Eigen::MatrixXd h(2, 2);
    h << 2, -1, -1, 2;
    EXPECT_NEAR(std::abs(green_function(h, 0, 1, {0.0, 0.0}) - 1.0 / 3.0), 0.0, 1e-15);
}

TEST(GreenFunction, EigenvalueIsConditioningError) {
    const Eigen::MatrixXd h = Eigen::MatrixXd::Constant(1, 1, 1.0);
    try {
        green_function(h, 0, 0, {1.0, 0.0});
        FAIL() << "expected ConditioningError";
    } catch (const ConditioningError& e) {
        EXPECT_EQ(e.distance_to_spectrum(), 0.0);
    }
    Eigen::MatrixXd m(2, 2);
    m << 2, -1, -1, 2;
    EXPECT_THROW(green_function(m, 0, 1, {3.0, 0.0}), ConditioningError);
}

TEST(GreenFunction, AgreesWithSpectralRoute) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> energy(0.0, 4.0), eps(0.01, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::MatrixXd h = random_h(rng);
        const auto spec = diagonalize(h);
        const SpectralParameterZ z{energy(rng), eps(rng)};
        std::uniform_int_distribution<SiteIndex> site(0, h.rows() - 1);
        const auto x = site(rng), y = site(rng);
        const auto spectral = matel(spec, [&](double s) { return 1.0 / (s - z.value()); }, x, y);
        EXPECT_NEAR(std::abs(green_function(h, x, y, z) - spectral), 0.0, 1e-9);
    }
}

TEST(GreenFunction, ResolventIdentity) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::MatrixXd h = random_h(rng);
        const SpectralParameterZ z1{0.7, 0.3}, z2{2.1, -0.5};
        const auto g1 = green_matrix(h, z1), g2 = green_matrix(h, z2);
        const Eigen::MatrixXcd lhs = g1 - g2;
        const Eigen::MatrixXcd rhs = (z1.value() - z2.value()) * g1 * g2;
        EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-8);
    }
}

TEST(GreenFunction, HerglotzAndSymmetry) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::MatrixXd h = random_h(rng);
        const SpectralParameterZ z{1.3, 0.05};
        const auto g = green_matrix(h, z);
        for (SiteIndex x = 0; x < h.rows(); ++x) EXPECT_GT(g(x, x).imag(), 0.0);
        EXPECT_LE((g - g.transpose()).cwiseAbs().maxCoeff(), 1e-12);
        const auto col = green_column(h, 0, z);
        EXPECT_LE((col - g.col(0)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(FractionalMoment, ZeroWidthIsDeterministic) {
    const auto model = chain(4, 0.0, 1.5);
    MomentOptions opts;
    opts.s = 0.5;
    opts.z = {1.0, 0.0};
    opts.realizations = 10;
    const auto est = fractional_moment_estimate(model, 2, 6, opts);
    const auto h = assemble_h(sample_params(model.disorder, model.lattice(), 0));
    EXPECT_NEAR(est.mean, std::pow(std::abs(green_function(h, 2, 6, opts.z)), 0.5), 1e-15);
    EXPECT_EQ(est.standard_error, 0.0);
    EXPECT_EQ(est.count, 10u);
}

TEST(FractionalMoment, MonotoneInExponentWhenGreenIsSmall) {
    // With z far below the spectrum |G| <= 1 / dist(z, spec) < 1.
    const auto model = chain(5, 4.0);
    MomentOptions opts;
    opts.z = {-3.0, 0.0};
    opts.realizations = 50;
    opts.seed = 4;
    opts.s = 0.3;
    const auto low = fractional_moment_estimate(model, 5, 8, opts);
    opts.s = 0.7;
    const auto high = fractional_moment_estimate(model, 5, 8, opts);
    EXPECT_GE(low.mean, high.mean);
}

TEST(FractionalMoment, DeterministicAcrossWorkers) {
    const auto model = chain(10, 8.0);
    MomentOptions opts;
    opts.z = {1.0, 0.0};
    opts.realizations = 40;
    opts.seed = 9;
    opts.workers = 1;
    const auto a = fractional_moment_estimate(model, 10, 15, opts);
    opts.workers = 4;
    const auto b = fractional_moment_estimate(model, 10, 15, opts);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.standard_error, b.standard_error);
}

TEST(FractionalMoment, RejectsBadExponent) {
    MomentOptions opts;
    opts.s = 1.0;
    EXPECT_THROW(fractional_moment_estimate(chain(2, 1.0), 0, 1, opts), ConfigError);
}

TEST(FractionalMoment, PersistentSingularityIsStatisticalFailure) {
    // Zero width makes every redraw identical, so z on the spectrum stays singular.
    const auto model = chain(0, 0.0, 2.0);
    MomentOptions opts;
    opts.z = {1.0, 0.0};
    opts.realizations = 5;
    EXPECT_THROW(fractional_moment_estimate(model, 0, 0, opts), StatisticalValidityError);
}
