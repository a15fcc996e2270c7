#pragma once

#include "lumilink/params.hpp"
#include "lumilink/rng.hpp"

namespace lumilink {

inline constexpr double kSpeedOfLight = 2.998e8;  // m/s

/// One channel realization: geometry, carrier and the block's fading draw.
struct Scenario {
    double d_r = 0.0;      ///< relay horizontal offset from the AP, m
    double d_u = 0.0;      ///< user horizontal offset from the AP, m
    double f_c = 0.0;      ///< RF carrier, Hz
    double h_rf_sq = 1.0;  ///< Rayleigh power gain |h_RF|^2
};

/// Derived per-realization quantities shared by the rate and energy models.
///
/// `beta` is the bias-to-photocurrent conversion eta H P_LED; it is unrelated
/// to the RF path-loss exponent, which lives in SystemParams::pl_exponent.
struct ChannelState {
    double h_vlc = 0.0;       ///< optical DC gain
    double sigma2_vlc = 0.0;  ///< shot-noise power, W
    double g_rf = 0.0;        ///< RF path loss (>= 1), divides received power
    double n0_w = 0.0;        ///< RF noise power, W
    double alpha = 0.0;       ///< VLC SNR per squared amplitude, 1/A^2
    double beta = 0.0;        ///< photocurrent per unit bias
    double zeta = 0.0;        ///< RF SNR per watt of transmit power, 1/W
    double f_coef = 0.0;      ///< fill * eta * H * P_LED * V_t, V
};

/// m = -1 / log2(cos theta). Throws DomainError unless 0 < theta < 90 deg.
double lambertian_order(double theta_half_deg);

/// Line-of-sight optical gain for a nadir-pointing LED and an upward-facing
/// photodetector, so irradiance and incidence angles both equal
/// atan(d_r / h_delta). Zero outside the field of view.
double vlc_channel_gain(const Scenario& scenario, const SystemParams& params);

double vlc_noise_power(const SystemParams& params);

/// Free-space loss at d0 times (d_u / d0)^pl_exponent. Throws DomainError for
/// d_u < d0 or a non-positive carrier.
double rf_path_loss(double d_u, double f_c, const SystemParams& params);

/// Thermal noise over the RF band including the noise figure, in watts.
double rf_noise_power(const SystemParams& params);

/// |h_RF|^2 for unit-power Rayleigh fading.
double sample_fading(RandomStream& rng);

ChannelState build_channel(const Scenario& scenario, const SystemParams& params);

}  // namespace lumilink
