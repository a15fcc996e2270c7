#pragma once

// Closed-form link model written out term by term in long double, straight
// from the physical definitions. Shares no code with the library and serves as
// the independent evaluator for unit and acceptance checks.

#include <cmath>

namespace lumilink::reference {

struct Constants {
    long double p_led = 1.5L;
    long double eta = 0.4L;
    long double i_low = 0.1L;
    long double i_high = 1.0L;
    long double b_vlc = 1.0e7L;
    long double b_rf = 1.0e7L;
    long double p0_dbm_hz = -174.0L;
    long double nf_db = 9.0L;
    long double v_t = 0.025L;
    long double i_0 = 1.0e-10L;
    long double q_e = 1.6e-19L;
    long double i_amb = 5.84e-3L;
    long double area = 1.0e-4L;
    long double height = 2.0L;
    long double fov_deg = 60.0L;
    long double half_power_deg = 60.0L;
    long double fill = 0.75L;
    long double r_th = 1.0e6L;
    long double pl_exp = 1.8L;
    long double d_ref = 1.0L;
};

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;
inline constexpr long double kE = 2.718281828459045235360287471352662498L;
inline constexpr long double kLight = 2.998e8L;

inline long double radians(long double deg) { return deg * kPi / 180.0L; }

inline long double lambertian(long double half_power_deg) {
    return -1.0L / (std::log(std::cos(radians(half_power_deg))) / std::log(2.0L));
}

inline long double optical_gain(long double d_r, const Constants& c = {}) {
    const long double m = lambertian(c.half_power_deg);
    const long double dist2 = c.height * c.height + d_r * d_r;
    const long double cos_angle = c.height / std::sqrt(dist2);
    if (std::acos(cos_angle) > radians(c.fov_deg)) return 0.0L;
    return (m + 1.0L) * c.area / (2.0L * kPi * dist2) * std::pow(cos_angle, m + 1.0L);
}

inline long double shot_noise(const Constants& c = {}) { return c.q_e * c.i_amb * c.b_vlc; }

inline long double path_loss(long double d_u, long double f_c, const Constants& c = {}) {
    const long double wavelength = kLight / f_c;
    const long double fs = 4.0L * kPi * c.d_ref / wavelength;
    return fs * fs * std::pow(d_u / c.d_ref, c.pl_exp);
}

inline long double rf_noise_watts(const Constants& c = {}) {
    const long double dbm = c.p0_dbm_hz + 10.0L * std::log10(c.b_rf) + c.nf_db;
    return std::pow(10.0L, (dbm - 30.0L) / 10.0L);
}

inline long double photocurrent_per_amp(long double d_r, const Constants& c = {}) {
    return c.eta * optical_gain(d_r, c) * c.p_led;
}

inline long double snr_per_amp2(long double d_r, const Constants& c = {}) {
    const long double k = photocurrent_per_amp(d_r, c);
    return kE / (2.0L * kPi) * k * k / shot_noise(c);
}

inline long double rf_snr_per_watt(long double d_u, long double f_c, long double h2, const Constants& c = {}) {
    return h2 / (path_loss(d_u, f_c, c) * rf_noise_watts(c));
}

/// Photovoltaic harvest over `seconds` at LED bias `bias`.
inline long double harvest(long double seconds, long double bias, long double d_r, const Constants& c = {}) {
    const long double i_dc = photocurrent_per_amp(d_r, c) * bias;
    return c.fill * seconds * i_dc * c.v_t * std::log(1.0L + i_dc / c.i_0);
}

inline long double vlc_rate(long double t, long double amp, long double d_r, const Constants& c = {}) {
    return t * c.b_vlc * std::log2(1.0L + snr_per_amp2(d_r, c) * amp * amp);
}

inline long double rf_rate(long double t_rf, long double energy, long double d_u, long double f_c,
                           long double h2, const Constants& c = {}) {
    if (t_rf <= 0.0L) return 0.0L;
    return t_rf * c.b_rf * std::log2(1.0L + rf_snr_per_watt(d_u, f_c, h2, c) * energy / t_rf);
}

/// Tangent of the bias-dependent harvest at `anchor`, plus the banked energy:
/// value and derivative of f T I ln(1 + beta I / I0) with f = fill eta H P V_t.
inline long double tangent_energy(long double bias, long double anchor, long double t_vlc, long double banked,
                                  long double d_r, const Constants& c = {}) {
    const long double beta = photocurrent_per_amp(d_r, c);
    const long double f = c.fill * beta * c.v_t;
    const long double ratio = beta * anchor / c.i_0;
    const long double g0 = f * t_vlc * anchor * std::log(1.0L + ratio);
    const long double dg = f * t_vlc * (std::log(1.0L + ratio) + ratio / (1.0L + ratio));
    return g0 + dg * (bias - anchor) + banked;
}

/// Exact end-to-end rate for amplitude I_H - bias.
inline long double end_to_end(long double bias, long double t_vlc, long double banked, long double d_r,
                              long double d_u, long double f_c, long double h2, const Constants& c = {}) {
    const long double r_v = vlc_rate(t_vlc, c.i_high - bias, d_r, c);
    const long double r_r = rf_rate(1.0L - t_vlc, harvest(t_vlc, bias, d_r, c) + banked, d_u, f_c, h2, c);
    return r_v < r_r ? r_v : r_r;
}

}  // namespace lumilink::reference
