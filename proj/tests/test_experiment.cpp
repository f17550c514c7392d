#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oscloc/errors.hpp"
#include "oscloc/experiment.hpp"
#include "oscloc/presets.hpp"
#include "oscloc/statistics.hpp"
#include "oscloc/system.hpp"

using namespace oscloc;

namespace {

ExperimentConfig chain_experiment(int half_width, double width, std::uint64_t n) {
    ExperimentConfig c;
    c.model.dimension = 1;
    c.model.half_width = half_width;
    c.model.disorder.width = width;
    c.realizations = n;
    c.seed = 12;
    c.observable.kind = ObservableKind::q_correlator;
    c.observable.alpha = -0.5;
    return c;
}

}  // namespace

TEST(SitePairs, CenterPolicyOnOpenBox) {
    const auto l = build_lattice(2, 3);
    const auto pairs = site_pairs(l, PairPolicy::center);
    EXPECT_EQ(pairs.size(), 1u + 4u * 3u);
    std::set<SiteIndex> ys;
    for (const auto& p : pairs) {
        EXPECT_EQ(p.x, l.center());
        EXPECT_EQ(p.separation, l.distance(p.x, p.y));
        EXPECT_TRUE(ys.insert(p.y).second);
    }
}

TEST(SitePairs, CenterPolicyOnRingVisitsEverySiteOnce) {
    const auto l = build_torus(1, 9);
    const auto pairs = site_pairs(l, PairPolicy::center);
    EXPECT_EQ(pairs.size(), 9u);
}

TEST(SitePairs, AllPolicy) {
    const auto l = build_lattice(1, 2);
    EXPECT_EQ(site_pairs(l, PairPolicy::all).size(), 25u);
    EXPECT_EQ(parse_pair_policy("all"), PairPolicy::all);
    EXPECT_THROW(parse_pair_policy("some"), ConfigError);
}

TEST(RunExperiment, SingleSiteDeterministicCorrelator) {
    ExperimentConfig c = chain_experiment(0, 0.0, 1);
    c.model.disorder.spring_lower = 2.0;
    c.observable.alpha = 0.0;
    const auto table = run_experiment(c);
    ASSERT_EQ(table.rows.size(), 1u);
    EXPECT_EQ(table.rows[0].separation, 0);
    EXPECT_DOUBLE_EQ(table.rows[0].mean, 1.0);
    EXPECT_EQ(table.rows[0].standard_error, 0.0);
    EXPECT_EQ(table.rows[0].count, 1u);
}

TEST(RunExperiment, ZeroWidthReproducesDeterministicObservable) {
    ExperimentConfig c = chain_experiment(6, 0.0, 5);
    c.model.disorder.spring_lower = 1.0;
    c.observable.kind = ObservableKind::static_gs;
    c.observable.entry = PqEntry::qq;
    const auto table = run_experiment(c);
    const OscillatorSystem sys(sample_params(c.model.disorder, c.model.lattice(), 0));
    ObservableEvaluator eval(sys, c.observable);
    const auto l = c.model.lattice();
    for (const auto& row : table.rows) {
        EXPECT_EQ(row.standard_error, 0.0);
        EXPECT_EQ(row.count, 5u * (row.separation == 0 ? 1u : 2u));
        const auto y = l.index({row.separation});
        EXPECT_NEAR(row.mean, eval(l.center(), y), 1e-12);
    }
}

TEST(RunExperiment, BitIdenticalAcrossWorkerCounts) {
    ExperimentConfig c = chain_experiment(15, 8.0, 24);
    c.observable.kind = ObservableKind::weyl_commutator_sup;
    c.observable.exponent = 0.5;
    c.workers = 1;
    const auto a = run_experiment(c);
    c.workers = 8;
    const auto b = run_experiment(c);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].mean, b.rows[i].mean);
        EXPECT_EQ(a.rows[i].standard_error, b.rows[i].standard_error);
    }
}

TEST(RunExperiment, ExponentIsAppliedBeforeAveraging) {
    ExperimentConfig c = chain_experiment(5, 8.0, 30);
    const auto plain = run_experiment(c);
    c.observable.exponent = 0.5;
    const auto rooted = run_experiment(c);
    // Jensen: E(X^{1/2}) <= E(X)^{1/2}, with equality only for degenerate X.
    for (std::size_t i = 1; i < plain.rows.size(); ++i) {
        EXPECT_LT(rooted.rows[i].mean, std::sqrt(plain.rows[i].mean));
    }
}

TEST(RunExperiment, OneDimensionalCorrelatorDecays) {
    ExperimentConfig c = chain_experiment(25, 8.0, 200);
    c.observable.exponent = 0.5;
    const auto table = run_experiment(c);
    std::vector<double> seps, means;
    for (const auto& row : table.rows) {
        EXPECT_GT(row.mean, 0.0);
        if (row.separation > 3) {
            seps.push_back(row.separation);
            means.push_back(row.mean);
        }
    }
    EXPECT_LT(spearman(seps, means), 0.0);
}

TEST(RunExperiment, EveryObservableKindRuns) {
    for (auto kind : {ObservableKind::q_correlator, ObservableKind::weyl_commutator_sup,
                      ObservableKind::pq_commutator_sup, ObservableKind::gs_pq_sup,
                      ObservableKind::thermal_pq_sup, ObservableKind::static_gs,
                      ObservableKind::static_thermal, ObservableKind::green_moment}) {
        ExperimentConfig c = chain_experiment(4, 4.0, 3);
        c.observable.kind = kind;
        c.observable.entry = PqEntry::qp;
        c.observable.z = {0.5, 0.1};
        const auto table = run_experiment(c);
        EXPECT_EQ(table.rows.size(), 5u) << to_string(kind);
        for (const auto& row : table.rows) EXPECT_TRUE(std::isfinite(row.mean));
    }
}

TEST(RunExperiment, GreenMomentUsesAnchorColumn) {
    ExperimentConfig c = chain_experiment(6, 8.0, 4);
    c.observable.kind = ObservableKind::green_moment;
    c.observable.s = 0.5;
    c.observable.z = {1.0, 0.0};
    c.pairs = PairPolicy::all;
    const auto all = run_experiment(c);
    EXPECT_EQ(all.rows.size(), 13u);
}

TEST(RunExperiment, DegenerateRealizationsAreStatisticalFailures) {
    // Zero springs and zero width leave h singular on every stream.
    ExperimentConfig c = chain_experiment(2, 0.0, 3);
    EXPECT_THROW(run_experiment(c), StatisticalValidityError);
}

TEST(RunExperiment, ValidatesConfig) {
    ExperimentConfig c = chain_experiment(2, 1.0, 0);
    EXPECT_THROW(run_experiment(c), ConfigError);
    c.realizations = 2;
    c.observable.exponent = 1.5;
    EXPECT_THROW(run_experiment(c), ConfigError);
}

TEST(Presets, Documented) {
    const auto one = regime_preset("one_dimensional");
    EXPECT_EQ(one.experiment.model.dimension, 1);
    EXPECT_EQ(one.experiment.model.disorder.width, 8.0);
    EXPECT_EQ(one.experiment.observable.kind, ObservableKind::weyl_commutator_sup);
    EXPECT_EQ(one.experiment.observable.exponent, 0.5);

    const auto large = regime_preset("large_disorder");
    EXPECT_EQ(large.experiment.model.disorder.width, 32.0);
    EXPECT_EQ(large.experiment.observable.kind, ObservableKind::weyl_commutator_sup);
    EXPECT_EQ(large.experiment.observable.exponent, 1.0);

    const auto band = regime_preset("band_edge_static");
    EXPECT_TRUE(band.experiment.model.dimension == 1 || band.experiment.model.dimension == 2);
    EXPECT_EQ(band.experiment.observable.kind, ObservableKind::static_gs);

    EXPECT_THROW(regime_preset("two_dimensional"), ConfigError);
    for (auto name : preset_names()) EXPECT_NO_THROW(regime_preset(name).experiment.validate());
}

TEST(Presets, OneDimensionalExponents) {
    ObservableSpec o;
    o.kind = ObservableKind::pq_commutator_sup;
    o.entry = PqEntry::qq;
    EXPECT_EQ(preset_exponent("one_dimensional", o), 0.5);
    o.entry = PqEntry::pp;
    EXPECT_EQ(preset_exponent("one_dimensional", o), 1.0);
    o.entry = PqEntry::qp;
    EXPECT_EQ(preset_exponent("one_dimensional", o), 1.0);
    EXPECT_EQ(preset_exponent("large_disorder", o), 1.0);
}
