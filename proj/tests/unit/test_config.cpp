#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "lumilink/config.hpp"
#include "lumilink/error.hpp"

namespace {

using lumilink::RunConfig;

TEST(Config, EmptyObjectKeepsDefaults) {
    EXPECT_EQ(lumilink::parse_run_config("{}"), RunConfig{});
}

TEST(Config, PartialSectionsOverlay) {
    const auto c = lumilink::parse_run_config(R"({"params": {"r_th": 2e6}, "experiment": {"seed": 7, "d_u": [4, 6]}})");
    EXPECT_EQ(c.params.r_th, 2e6);
    EXPECT_EQ(c.params.i_max, 1.0);
    EXPECT_EQ(c.experiment.seed, 7u);
    EXPECT_EQ(c.experiment.d_u, lumilink::DistancePolicy(std::vector<double>{4.0, 6.0}));
    EXPECT_EQ(c.solver, lumilink::default_settings());
}

TEST(Config, RoundTripsEveryField) {
    RunConfig c;
    c.params.p_led = 1.25;
    c.params.nf_db = 7.5;
    c.solver.mm_tol = 1e-11;
    c.solver.vlc_objective = lumilink::VlcObjective::high_snr;
    c.solver.ridge_search = false;
    c.experiment.cases = {lumilink::case_from_index(4), lumilink::case_from_index(1)};
    c.experiment.n_blocks = 7;
    c.experiment.d_r = 1.5;
    c.experiment.d_u = lumilink::UniformRange{4.5, 7.25};
    c.experiment.f_c = 5e9;
    c.experiment.seed = 18446744073709551615ULL;
    c.experiment.steady_blocks = 3;
    c.experiment.threads = 2;
    const auto back = lumilink::parse_run_config(lumilink::dump_run_config(c));
    EXPECT_EQ(back, c);
    EXPECT_EQ(lumilink::dump_run_config(back), lumilink::dump_run_config(c));
}

TEST(Config, RoundTripsAwkwardDoubles) {
    RunConfig c;
    c.params.i_amb = 0.1 + 0.2;
    c.params.q_e = 1.602176634e-19;
    c.experiment.d_u = std::vector<double>{4.000000000000001, 1.0 / 3.0 + 4.0};
    EXPECT_EQ(lumilink::parse_run_config(lumilink::dump_run_config(c)), c);
}

TEST(Config, ManifestLoadsAsConfig) {
    RunConfig c;
    c.experiment.seed = 31;
    const auto text = lumilink::dump_manifest(c, {"0.1.0", "2026-01-01T00:00:00Z", "lumilink experiment", "sweep-du"});
    EXPECT_EQ(lumilink::parse_run_config(text), c);
}

TEST(Config, RejectsUnknownFields) {
    EXPECT_THROW(lumilink::parse_run_config(R"({"params": {"bogus": 1}})"), lumilink::ConfigError);
    EXPECT_THROW(lumilink::parse_run_config(R"({"extras": {}})"), lumilink::ConfigError);
}

TEST(Config, RejectsWrongTypesAndInvalidValues) {
    EXPECT_THROW(lumilink::parse_run_config(R"({"params": {"r_th": "high"}})"), lumilink::ConfigError);
    EXPECT_THROW(lumilink::parse_run_config(R"({"experiment": {"seed": -1}})"), lumilink::ConfigError);
    EXPECT_THROW(lumilink::parse_run_config(R"({"experiment": {"n_trials": 0}})"), lumilink::ConfigError);
    EXPECT_THROW(lumilink::parse_run_config(R"({"params": {"i_min": 2.0}})"), lumilink::ConfigError);
    EXPECT_THROW(lumilink::parse_run_config("not json"), lumilink::ConfigError);
}

TEST(Config, MissingFileIsConfigError) {
    EXPECT_THROW(lumilink::load_run_config("/nonexistent/lumilink.json"), lumilink::ConfigError);
}

TEST(Config, LoadsFromFile) {
    const auto path = std::filesystem::temp_directory_path() / "lumilink_test_config.json";
    std::ofstream(path) << R"({"experiment": {"n_blocks": 3}})";
    EXPECT_EQ(lumilink::load_run_config(path).experiment.n_blocks, 3);
    std::filesystem::remove(path);
}

}  // namespace
