#include <gtest/gtest.h>

#include "lumilink/error.hpp"
#include "lumilink/report.hpp"
#include "lumilink/sim.hpp"

namespace {

using lumilink::case_from_index;
using lumilink::default_params;
using lumilink::default_settings;
using lumilink::DistancePolicy;
using lumilink::ExperimentConfig;
using lumilink::UniformRange;

ExperimentConfig small_config() {
    ExperimentConfig c;
    c.n_blocks = 4;
    c.n_trials = 6;
    c.threads = 1;
    c.seed = 99;
    return c;
}

lumilink::TrialDraw constant_draw(int n_blocks, double h2) {
    return lumilink::TrialDraw{0.5, 5.0, std::vector<double>(n_blocks, h2)};
}

TEST(Sim, ParsesDistancePolicies) {
    EXPECT_EQ(lumilink::parse_distance_policy("4"), DistancePolicy(4.0));
    EXPECT_EQ(lumilink::parse_distance_policy("4,5,6"), DistancePolicy(std::vector<double>{4.0, 5.0, 6.0}));
    EXPECT_EQ(lumilink::parse_distance_policy("4:8"), DistancePolicy(UniformRange{4.0, 8.0}));
    EXPECT_THROW(lumilink::parse_distance_policy("x"), lumilink::ConfigError);
    EXPECT_THROW(lumilink::parse_distance_policy("1:2:3"), lumilink::ConfigError);
}

TEST(Sim, DistancePolicyTextRoundTrips) {
    for (const char* text : {"0", "4,5,6,7,8", "4:8", "0.25:1.5"}) {
        const auto policy = lumilink::parse_distance_policy(text);
        EXPECT_EQ(lumilink::parse_distance_policy(lumilink::to_string(policy)), policy) << text;
    }
}

TEST(Sim, ValidationRejectsBadCounts) {
    auto c = small_config();
    c.n_trials = 0;
    EXPECT_FALSE(lumilink::validate(c).empty());
    c = small_config();
    c.d_u = UniformRange{8.0, 4.0};
    EXPECT_FALSE(lumilink::validate(c).empty());
    EXPECT_TRUE(lumilink::validate(small_config()).empty());
}

TEST(Sim, SteadyStateCountsLastHalf) {
    auto c = small_config();
    c.n_blocks = 20;
    EXPECT_EQ(lumilink::steady_block_count(c), 10);
    c.n_blocks = 5;
    EXPECT_EQ(lumilink::steady_block_count(c), 3);
    c.steady_blocks = 2;
    EXPECT_EQ(lumilink::steady_block_count(c), 2);
}

TEST(Sim, NoCarryOverMeansIdenticalBlocks) {
    const auto c = small_config();
    const auto draw = constant_draw(c.n_blocks, 0.9);
    for (int idx : {2, 4}) {
        const auto r = lumilink::run_trial(case_from_index(idx), draw, c, default_params(), default_settings());
        ASSERT_EQ(r.blocks.size(), 4u);
        for (const auto& b : r.blocks) {
            EXPECT_EQ(b.i_b, r.blocks[0].i_b);
            EXPECT_EQ(b.t_vlc, r.blocks[0].t_vlc);
            EXPECT_EQ(b.r_e2e, r.blocks[0].r_e2e);
        }
    }
}

TEST(Sim, EnergyBankOnlyHelps) {
    auto c = small_config();
    c.n_blocks = 3;
    const auto r = lumilink::run_trial(case_from_index(1), constant_draw(3, 1.0), c, default_params(),
                                       default_settings());
    for (int k = 1; k < 3; ++k) EXPECT_GE(r.blocks[k].r_e2e, r.blocks[k - 1].r_e2e * (1.0 - 1e-9));
}

TEST(Sim, SingleBlockErasesCarryOver) {
    auto c = small_config();
    c.n_blocks = 1;
    const auto t = c.n_trials;
    const auto table = lumilink::run_experiment(c, default_params(), default_settings());
    ASSERT_EQ(table.rows.size(), 4u);
    EXPECT_EQ(table.rows[0].trial_rates, table.rows[1].trial_rates);
    EXPECT_EQ(table.rows[2].trial_rates, table.rows[3].trial_rates);
    EXPECT_EQ(table.rows[0].n_trials, t);
}

TEST(Sim, AveragesStayWithinBlockRange) {
    const auto c = small_config();
    lumilink::RandomStream rng(3);
    const auto draw = lumilink::draw_trial(c.d_r, c.d_u, c.n_blocks, rng);
    const auto r = lumilink::run_trial(case_from_index(1), draw, c, default_params(), default_settings());
    double lo = 1e300, hi = -1e300;
    for (const auto& b : r.blocks) {
        lo = std::min(lo, b.r_e2e);
        hi = std::max(hi, b.r_e2e);
    }
    EXPECT_GE(r.rate_mean, lo);
    EXPECT_LE(r.rate_mean, hi);
    EXPECT_GE(r.outage_frac, 0.0);
    EXPECT_LE(r.outage_frac, 1.0);
}

TEST(Sim, DrawHoldsGeometryAndRedrawsFading) {
    lumilink::RandomStream rng(11);
    const auto d = lumilink::draw_trial(UniformRange{0.0, 2.0}, 6.0, 5, rng);
    EXPECT_GE(d.d_r, 0.0);
    EXPECT_LE(d.d_r, 2.0);
    EXPECT_EQ(d.d_u, 6.0);
    ASSERT_EQ(d.h_rf_sq.size(), 5u);
    EXPECT_NE(d.h_rf_sq[0], d.h_rf_sq[1]);
}

TEST(Sim, SweepSharesFadingAcrossSettings) {
    lumilink::RandomStream a(4);
    lumilink::RandomStream b(4);
    const auto x = lumilink::draw_trial(0.0, 4.0, 3, a);
    const auto y = lumilink::draw_trial(0.0, 8.0, 3, b);
    EXPECT_EQ(x.h_rf_sq, y.h_rf_sq);
}

TEST(Sim, RowOrderAndCount) {
    auto c = small_config();
    c.n_trials = 2;
    c.n_blocks = 2;
    c.d_r = std::vector<double>{0.0, 2.0};
    c.d_u = std::vector<double>{4.0, 8.0};
    c.cases = {case_from_index(1), case_from_index(3)};
    const auto table = lumilink::run_experiment(c, default_params(), default_settings());
    ASSERT_EQ(table.rows.size(), 8u);
    EXPECT_EQ(table.rows[0].d_r, "0");
    EXPECT_EQ(table.rows[0].d_u, "4");
    EXPECT_EQ(table.rows[0].case_index, 1);
    EXPECT_EQ(table.rows[1].case_index, 3);
    EXPECT_EQ(table.rows[2].d_u, "8");
    EXPECT_EQ(table.rows[4].d_r, "2");
}

TEST(Sim, DeterministicForSeed) {
    const auto c = small_config();
    const auto a = lumilink::format_results_csv(lumilink::run_experiment(c, default_params(), default_settings()));
    const auto b = lumilink::format_results_csv(lumilink::run_experiment(c, default_params(), default_settings()));
    EXPECT_EQ(a, b);
    auto other = c;
    other.seed = 100;
    EXPECT_NE(a, lumilink::format_results_csv(lumilink::run_experiment(other, default_params(), default_settings())));
}

TEST(Sim, ThreadCountDoesNotChangeResults) {
    auto c = small_config();
    const auto one = lumilink::format_results_csv(lumilink::run_experiment(c, default_params(), default_settings()));
    c.threads = 4;
    const auto four = lumilink::format_results_csv(lumilink::run_experiment(c, default_params(), default_settings()));
    EXPECT_EQ(one, four);
}

TEST(Sim, OracleCheckRunsOnCoarseGrid) {
    lumilink::OracleCheckConfig c;
    c.n = 4;
    c.grid = 3;
    const auto report = lumilink::run_oracle_check(c, default_params(), default_settings());
    EXPECT_EQ(report.entries.size(), 16u);
    // A 3x3 grid is far coarser than the optimizer.
    EXPECT_LE(report.max_gap, 0.0);
}

}  // namespace
