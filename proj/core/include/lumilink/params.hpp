#pragma once

#include <string>
#include <vector>

namespace lumilink {

/// Hardware and channel constants of the hybrid VLC/RF downlink.
///
/// Logarithmic quantities (p0_dbm_per_hz, nf_db) are stored as configured and
/// only converted to linear SI units by the channel functions. Everything else
/// is SI: W, A, Hz, V, C, m, bit/s.
struct SystemParams {
    double p_led = 0.0;            ///< LED power per unit current, W/A
    double eta = 0.0;              ///< photodetector responsivity, A/W
    double i_min = 0.0;            ///< minimum DC bias I_L, A
    double i_max = 0.0;            ///< maximum DC bias I_H, A
    double b_vlc = 0.0;            ///< VLC double-sided bandwidth, Hz
    double b_rf = 0.0;             ///< RF bandwidth, Hz
    double p0_dbm_per_hz = 0.0;    ///< thermal noise density, dBm/Hz
    double nf_db = 0.0;            ///< receiver noise figure, dB
    double v_t = 0.0;              ///< thermal voltage, V
    double i_0 = 0.0;              ///< dark saturation current, A
    double q_e = 0.0;              ///< electron charge, C
    double i_amb = 0.0;            ///< ambient-light induced current, A
    double a_p = 0.0;              ///< photodetector area, m^2
    double h_delta = 0.0;          ///< AP height above the relay, m
    double phi_fov_deg = 0.0;      ///< photodetector half field of view, deg
    double theta_half_deg = 0.0;   ///< LED half-power semi-angle, deg
    double fill_factor = 0.0;      ///< harvesting fill factor
    double r_th = 0.0;             ///< minimum RF-hop rate, bit/s
    double pl_exponent = 0.0;      ///< RF path-loss exponent
    double d0 = 0.0;               ///< RF reference distance, m

    friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Which VLC rate expression the optimizer maximizes internally.
///
/// `exact` uses log2(1 + alpha A^2). `high_snr` uses log2(alpha A^2), which is
/// a lower bound that goes to -inf as the amplitude vanishes. Reported rates
/// are always exact.
enum class VlcObjective { exact, high_snr };

struct SolverSettings {
    double mm_tol = 1e-9;           ///< stop MM when the bias moves less than this, A
    int mm_max_iter = 100;
    double alt_rel_tol = 1e-6;      ///< relative objective gain that ends alternation
    int alt_max_cycles = 50;
    double line_search_tol = 1e-9;  ///< on T, and on bias normalized to its interval
    int oracle_grid = 201;          ///< grid points per axis for the brute-force oracle
    VlcObjective vlc_objective = VlcObjective::exact;
    bool ridge_search = true;       ///< 1-D search over T of the bias-optimal objective

    friend bool operator==(const SolverSettings&, const SolverSettings&) = default;
};

/// Time fractions are searched on [kMinTimeFraction, 1 - kMinTimeFraction].
inline constexpr double kMinTimeFraction = 1e-6;

/// Indoor defaults: 10 MHz links, 1.5 W/A LED biased in [0.1, 1] A, 2 m AP
/// height, 60 degree optics, 1 Mbit/s RF threshold, path-loss exponent 1.8.
SystemParams default_params();

SolverSettings default_settings();

/// Every violated invariant, one human-readable message per violation.
/// Empty when the parameters are usable.
std::vector<std::string> validate(const SystemParams& params);
std::vector<std::string> validate(const SolverSettings& settings);

/// Lower end of the restricted bias interval, (I_L + I_H) / 2. Above it the
/// peak amplitude is limited by I_H - I_b alone.
inline double restricted_bias_min(const SystemParams& p) { return 0.5 * (p.i_min + p.i_max); }

std::string to_string(VlcObjective objective);
VlcObjective vlc_objective_from_string(const std::string& text);

}  // namespace lumilink
