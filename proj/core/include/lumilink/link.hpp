#pragma once

#include "lumilink/channel.hpp"
#include "lumilink/params.hpp"

namespace lumilink {

/// Decision variables and resulting link figures for one transmission block.
/// Block length is one second, so time fractions are also durations in s.
struct BlockDecision {
    double i_b = 0.0;       ///< DC bias, A
    double amp = 0.0;       ///< peak signal amplitude, A
    double t_vlc = 0.5;     ///< VLC phase fraction
    double t_rf = 0.5;      ///< RF phase fraction
    double e_h = 0.0;       ///< energy available to the relay this block, J
    double r_vlc = 0.0;     ///< bit/s
    double r_rf = 0.0;      ///< bit/s
    double r_e2e = 0.0;     ///< decode-and-forward end-to-end rate, bit/s
    double e2_next = 0.0;   ///< RF-phase harvest banked for the next block, J
    bool feasible = true;   ///< RF rate meets the configured threshold
};

/// Energy carried into a block from the previous block's RF phase.
struct BlockState {
    double e2_prev = 0.0;
};

/// Exact VLC rate T B log2(1 + alpha A^2).
double vlc_rate(double t_vlc, double amp, const ChannelState& ch, const SystemParams& params);

/// Energy harvested while the LED carries data at bias i_b for t_vlc seconds.
double harvest_phase1(double t_vlc, double i_b, const ChannelState& ch, const SystemParams& params);

/// Energy harvested during the RF phase, with the LED at full bias and no AC.
double harvest_phase2(double t_rf, const ChannelState& ch, const SystemParams& params);

double total_harvest(double t_vlc, double i_b, double e2_prev, const ChannelState& ch,
                     const SystemParams& params);

/// T B log2(1 + zeta E / T); the relay spends its whole budget over the RF
/// phase, so transmit power is E / T. Zero for t_rf <= 0.
double rf_rate(double t_rf, double e_h, const ChannelState& ch, const SystemParams& params);

inline double end_to_end_rate(double r_vlc, double r_rf) { return r_vlc < r_rf ? r_vlc : r_rf; }

}  // namespace lumilink
