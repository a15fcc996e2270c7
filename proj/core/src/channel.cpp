#include "lumilink/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lumilink/error.hpp"

namespace lumilink {

namespace {

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

double lambertian_order(double theta_half_deg) {
    if (!(theta_half_deg > 0.0 && theta_half_deg < 90.0)) {
        throw DomainError("lambertian_order: half-power angle must lie in (0, 90) deg, got " +
                          std::to_string(theta_half_deg));
    }
    return -1.0 / std::log2(std::cos(deg_to_rad(theta_half_deg)));
}

double vlc_channel_gain(const Scenario& scenario, const SystemParams& params) {
    const double m = lambertian_order(params.theta_half_deg);
    const double angle = std::atan2(std::abs(scenario.d_r), params.h_delta);
    if (angle > deg_to_rad(params.phi_fov_deg)) return 0.0;
    const double dist_sq = params.h_delta * params.h_delta + scenario.d_r * scenario.d_r;
    const double c = std::cos(angle);
    return (m + 1.0) * params.a_p / (2.0 * std::numbers::pi * dist_sq) * std::pow(c, m) * c;
}

double vlc_noise_power(const SystemParams& params) {
    return params.q_e * params.i_amb * params.b_vlc;
}

double rf_path_loss(double d_u, double f_c, const SystemParams& params) {
    if (!(f_c > 0.0)) throw DomainError("rf_path_loss: carrier frequency must be > 0");
    if (!(d_u >= params.d0)) {
        throw DomainError("rf_path_loss: user distance " + std::to_string(d_u) +
                          " m is inside the reference distance");
    }
    const double lambda = kSpeedOfLight / f_c;
    const double free_space = 4.0 * std::numbers::pi * params.d0 / lambda;
    return free_space * free_space * std::pow(d_u / params.d0, params.pl_exponent);
}

double rf_noise_power(const SystemParams& params) {
    const double dbm = params.p0_dbm_per_hz + 10.0 * std::log10(params.b_rf) + params.nf_db;
    return std::pow(10.0, dbm / 10.0) * 1e-3;
}

double sample_fading(RandomStream& rng) { return rng.exponential(); }

ChannelState build_channel(const Scenario& scenario, const SystemParams& params) {
    if (!(scenario.d_r >= 0.0)) throw DomainError("build_channel: d_r must be >= 0");
    if (!(scenario.h_rf_sq >= 0.0)) throw DomainError("build_channel: |h_RF|^2 must be >= 0");

    ChannelState ch;
    ch.h_vlc = vlc_channel_gain(scenario, params);
    ch.sigma2_vlc = vlc_noise_power(params);
    ch.g_rf = rf_path_loss(scenario.d_u, scenario.f_c, params);
    ch.n0_w = rf_noise_power(params);
    ch.beta = params.eta * ch.h_vlc * params.p_led;
    ch.alpha = std::numbers::e * ch.beta * ch.beta / (2.0 * std::numbers::pi * ch.sigma2_vlc);
    ch.zeta = scenario.h_rf_sq / (ch.g_rf * ch.n0_w);
    ch.f_coef = params.fill_factor * ch.beta * params.v_t;
    return ch;
}

}  // namespace lumilink
