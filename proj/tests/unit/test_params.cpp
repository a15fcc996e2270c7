#include <gtest/gtest.h>

#include <algorithm>

#include "lumilink/error.hpp"
#include "lumilink/params.hpp"

namespace {

using lumilink::default_params;
using lumilink::default_settings;

bool mentions(const std::vector<std::string>& errors, const std::string& needle) {
    return std::any_of(errors.begin(), errors.end(),
                       [&](const std::string& e) { return e.find(needle) != std::string::npos; });
}

TEST(Params, DefaultsMatchTable) {
    const auto p = default_params();
    EXPECT_DOUBLE_EQ(p.i_max, 1.0);
    EXPECT_DOUBLE_EQ(p.i_min, 0.1);
    EXPECT_DOUBLE_EQ(p.r_th, 1e6);
    EXPECT_DOUBLE_EQ(p.d0, 1.0);
    EXPECT_DOUBLE_EQ(p.pl_exponent, 1.8);
    EXPECT_DOUBLE_EQ(p.i_amb, 5.84e-3);
    EXPECT_DOUBLE_EQ(lumilink::restricted_bias_min(p), 0.55);
}

TEST(Params, DefaultsValidate) {
    EXPECT_TRUE(lumilink::validate(default_params()).empty());
    EXPECT_TRUE(lumilink::validate(default_settings()).empty());
}

TEST(Params, RejectsInvertedBiasRange) {
    auto p = default_params();
    p.i_min = 0.2;
    p.i_max = 0.1;
    EXPECT_TRUE(mentions(lumilink::validate(p), "i_min < i_max violated"));
}

TEST(Params, RejectsRightAngleSemiAngle) {
    auto p = default_params();
    p.theta_half_deg = 90.0;
    EXPECT_TRUE(mentions(lumilink::validate(p), "theta_half_deg"));
}

TEST(Params, RejectsPathLossExponentOutOfRange) {
    auto p = default_params();
    p.pl_exponent = 3.5;
    EXPECT_TRUE(mentions(lumilink::validate(p), "pl_exponent"));
}

TEST(Params, RejectsNegativeThreshold) {
    auto p = default_params();
    p.r_th = -1.0;
    EXPECT_FALSE(lumilink::validate(p).empty());
}

TEST(Params, RejectsTinyOracleGrid) {
    auto s = default_settings();
    s.oracle_grid = 2;
    EXPECT_FALSE(lumilink::validate(s).empty());
}

TEST(Params, VlcObjectiveNamesRoundTrip) {
    for (auto o : {lumilink::VlcObjective::exact, lumilink::VlcObjective::high_snr}) {
        EXPECT_EQ(lumilink::vlc_objective_from_string(lumilink::to_string(o)), o);
    }
    EXPECT_THROW(lumilink::vlc_objective_from_string("bogus"), lumilink::ConfigError);
}

}  // namespace
