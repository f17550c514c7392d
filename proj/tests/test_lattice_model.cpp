#include <gtest/gtest.h>

#include <random>
#include <set>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "oscloc/errors.hpp"
#include "oscloc/lattice.hpp"
#include "oscloc/model.hpp"
#include "oscloc/rng.hpp"

using namespace oscloc;

TEST(Lattice, OpenBoxCountsAndEdges) {
    const auto l1 = build_lattice(1, 3);
    EXPECT_EQ(l1.site_count(), 7);
    EXPECT_EQ(l1.edges().size(), 6u);
    const auto l2 = build_lattice(2, 2);
    EXPECT_EQ(l2.site_count(), 25);
    EXPECT_EQ(l2.edges().size(), 2u * 5u * 4u);
    EXPECT_EQ(l2.coordinates(l2.center()), (std::vector<int>{0, 0}));
}

TEST(Lattice, SingleSiteHasNoEdges) {
    const auto l = build_lattice(3, 0);
    EXPECT_EQ(l.site_count(), 1);
    EXPECT_TRUE(l.edges().empty());
}

TEST(Lattice, TorusWrapsAndUsesMinimumImage) {
    const auto ring = build_torus(1, 8);
    EXPECT_EQ(ring.edges().size(), 8u);
    EXPECT_EQ(ring.distance(0, 7), 1);
    EXPECT_EQ(ring.distance(0, 4), 4);
    const auto torus = build_torus(2, 4);
    EXPECT_EQ(torus.edges().size(), 32u);
    for (SiteIndex x = 0; x < torus.site_count(); ++x) EXPECT_EQ(torus.neighbours(x).size(), 4u);
}

TEST(Lattice, EdgesAreCanonicalAndUnique) {
    const auto l = build_torus(2, 5);
    std::set<std::pair<SiteIndex, SiteIndex>> seen;
    for (const auto& e : l.edges()) {
        EXPECT_LT(e.first, e.second);
        EXPECT_TRUE(seen.insert({e.first, e.second}).second);
        EXPECT_EQ(l.distance(e.first, e.second), 1);
    }
}

TEST(Lattice, IndexRoundTrip) {
    const auto l = build_lattice(3, 2);
    for (SiteIndex x = 0; x < l.site_count(); ++x) EXPECT_EQ(l.index(l.coordinates(x)), x);
    EXPECT_THROW(l.index({3, 0, 0}), ConfigError);
}

TEST(Lattice, SizeLimit) {
    EXPECT_THROW(build_lattice(2, 40), SizeError);
    EXPECT_NO_THROW(build_lattice(2, 40, 10000));
    EXPECT_THROW(build_torus(1, 2), ConfigError);
    EXPECT_THROW(build_lattice(1, -1), ConfigError);
}

TEST(Model, H0OnTwoSitesMatchesHandAssembly) {
    const auto l = build_lattice(1, 0);
    auto p = constant_params(l, 0.5, 2.0, 1.0);
    EXPECT_DOUBLE_EQ(assemble_h(p)(0, 0), 1.0);

    const Lattice pair(1, 2, 0, Boundary::open);
    ModelParams q{pair, {0.5, 0.5}, {2.0, 2.0}, {1.0}};
    const Eigen::MatrixXd h0 = assemble_h0(q);
    EXPECT_DOUBLE_EQ(h0(0, 0), 2.0);
    EXPECT_DOUBLE_EQ(h0(0, 1), -1.0);
    EXPECT_DOUBLE_EQ(h0(1, 0), -1.0);
    EXPECT_DOUBLE_EQ(h0(1, 1), 2.0);
}

TEST(Model, HIsSymmetricScaling) {
    std::mt19937_64 rng(3);
    const auto l = build_lattice(2, 2);
    const auto p = oracle::random_params(rng, l);
    const Eigen::MatrixXd h0 = assemble_h0(p);
    const Eigen::VectorXd mu = mass_matrix(p);
    const Eigen::MatrixXd expected = mu.cwiseSqrt().asDiagonal() * h0 * mu.cwiseSqrt().asDiagonal();
    const Eigen::MatrixXd h = assemble_h(p);
    EXPECT_EQ(h, h.transpose());
    EXPECT_LE((h - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Model, ValidationRejectsBadParameters) {
    const auto l = build_lattice(1, 1);
    EXPECT_THROW(constant_params(l, 0.0, 1.0, 1.0), ConfigError);
    EXPECT_THROW(constant_params(l, 1.0, -1.0, 1.0), ConfigError);
    EXPECT_THROW(constant_params(l, 1.0, 1.0, -0.5), ConfigError);
    DisorderSpec d;
    d.width = -1.0;
    EXPECT_THROW(d.validate(), ConfigError);
}

TEST(Model, SamplingIsPureAndInRange) {
    DisorderSpec d;
    d.width = 8.0;
    d.seed = 42;
    const auto l = build_lattice(1, 10);
    const auto a = sample_params(d, l, 5);
    const auto b = sample_params(d, l, 5);
    EXPECT_EQ(a.spring, b.spring);
    const auto c = sample_params(d, l, 6);
    EXPECT_NE(a.spring, c.spring);
    const auto r = sample_params(d, l, 5, kResampleStream);
    EXPECT_NE(a.spring, r.spring);
    for (double k : a.spring) {
        EXPECT_GE(k, 0.0);
        EXPECT_LT(k, 8.0);
    }
}

TEST(Model, ZeroWidthDisorderIsDeterministic) {
    DisorderSpec d;
    d.width = 0.0;
    d.spring_lower = 1.5;
    const auto p = sample_params(d, build_lattice(1, 2), 9);
    for (double k : p.spring) EXPECT_EQ(k, 1.5);
    EXPECT_TRUE(std::isinf(d.density_sup()));
}

TEST(Model, NormBoundHolds) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto l = oracle::random_lattice(rng);
        const auto p = oracle::random_params(rng, l);
        const Eigen::MatrixXd h = assemble_h(p);
        const double norm = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h).eigenvalues().cwiseAbs().maxCoeff();
        EXPECT_LE(norm, norm_bound(p.observed_bounds(), l.dimension()));
    }
}

TEST(Rng, UniformIsInUnitIntervalAndKeyed) {
    CounterRng rng(7);
    double sum = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const double u = rng.uniform01(0, i);
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 10000.0, 0.5, 0.01);
    EXPECT_NE(rng.bits(0, 0, 0), rng.bits(0, 0, 1));
    EXPECT_NE(rng.bits(0, 1, 0), rng.bits(1, 0, 0));
    EXPECT_NE(CounterRng(8).bits(0, 0), rng.bits(0, 0));
}
