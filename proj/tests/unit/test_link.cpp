#include <gtest/gtest.h>

#include <cmath>

#include "lumilink/link.hpp"
#include "reference_model.hpp"

namespace {

namespace ref = lumilink::reference;
using lumilink::default_params;

class Link : public ::testing::Test {
protected:
    lumilink::SystemParams p = default_params();
    lumilink::ChannelState ch = lumilink::build_channel(lumilink::Scenario{0.0, 4.0, 2.4e9, 1.0}, p);
};

TEST_F(Link, VlcRate) {
    EXPECT_EQ(lumilink::vlc_rate(0.5, 0.0, ch, p), 0.0);
    const double r = lumilink::vlc_rate(0.5, 0.45, ch, p);
    EXPECT_NEAR(r, 3.873e7, 1e4);
    EXPECT_NEAR(r, static_cast<double>(ref::vlc_rate(0.5L, 0.45L, 0.0L)), 1e-6 * r);
    EXPECT_DOUBLE_EQ(lumilink::vlc_rate(1.0, 0.45, ch, p), 2.0 * r);
}

TEST_F(Link, PhaseOneHarvest) {
    const double e = lumilink::harvest_phase1(1.0, 1.0, ch, p);
    EXPECT_NEAR(e, 9.645e-7, 1e-10);
    EXPECT_NEAR(e, static_cast<double>(ref::harvest(1.0L, 1.0L, 0.0L)), 1e-12 * e);
    EXPECT_EQ(lumilink::harvest_phase1(1.0, 0.0, ch, p), 0.0);
    EXPECT_DOUBLE_EQ(lumilink::harvest_phase1(0.5, 1.0, ch, p), 0.5 * e);
}

TEST_F(Link, PhaseTwoHarvest) {
    EXPECT_EQ(lumilink::harvest_phase2(0.0, ch, p), 0.0);
    const double e = lumilink::harvest_phase2(0.5, ch, p);
    EXPECT_NEAR(e, 4.822e-7, 1e-10);
    EXPECT_DOUBLE_EQ(e, lumilink::harvest_phase1(0.5, p.i_max, ch, p));
}

TEST_F(Link, TotalHarvest) {
    EXPECT_DOUBLE_EQ(lumilink::total_harvest(0.7, 0.8, 0.0, ch, p), lumilink::harvest_phase1(0.7, 0.8, ch, p));
    const double e = lumilink::total_harvest(1.0, 1.0, 4.822e-7, ch, p);
    EXPECT_NEAR(e, 1.4467e-6, 1e-10);
    const double a = lumilink::total_harvest(0.4, 0.9, 1e-7, ch, p);
    const double b = lumilink::total_harvest(0.4, 0.9, 3e-7, ch, p);
    EXPECT_NEAR(b - a, 2e-7, 1e-20);
}

TEST_F(Link, RfRate) {
    EXPECT_EQ(lumilink::rf_rate(0.5, 0.0, ch, p), 0.0);
    EXPECT_EQ(lumilink::rf_rate(0.0, 1e-6, ch, p), 0.0);
    const double r = lumilink::rf_rate(0.5, 9.645e-7, ch, p);
    EXPECT_NEAR(r, 2.83e7, 1e5);
    EXPECT_NEAR(r, static_cast<double>(ref::rf_rate(0.5L, 9.645e-7L, 4.0L, 2.4e9L, 1.0L)), 1e-9 * r);
}

TEST_F(Link, RfRateVanishesWithTime) {
    const double r = lumilink::rf_rate(1e-9, 9.645e-7, ch, p);
    EXPECT_LT(r, 1e-2 * lumilink::rf_rate(0.5, 9.645e-7, ch, p));
    EXPECT_LT(lumilink::rf_rate(1e-12, 9.645e-7, ch, p), r);
}

TEST_F(Link, EndToEnd) {
    EXPECT_EQ(lumilink::end_to_end_rate(3.87e7, 2.83e7), 2.83e7);
    EXPECT_EQ(lumilink::end_to_end_rate(5.0, 5.0), 5.0);
    EXPECT_EQ(lumilink::end_to_end_rate(0.0, 9.0), 0.0);
}

TEST_F(Link, RfRateConcaveInTime) {
    const double e = 1e-6;
    for (double t = 0.05; t < 0.95; t += 0.05) {
        const double h = 0.03;
        const double mid = lumilink::rf_rate(t, e, ch, p);
        const double avg = 0.5 * (lumilink::rf_rate(t - h, e, ch, p) + lumilink::rf_rate(t + h, e, ch, p));
        EXPECT_GE(mid, avg);
    }
}

}  // namespace
