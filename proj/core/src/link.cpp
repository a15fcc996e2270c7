#include "lumilink/link.hpp"

#include <cmath>

namespace lumilink {

double vlc_rate(double t_vlc, double amp, const ChannelState& ch, const SystemParams& params) {
    return t_vlc * params.b_vlc * std::log2(1.0 + ch.alpha * amp * amp);
}

double harvest_phase1(double t_vlc, double i_b, const ChannelState& ch, const SystemParams& params) {
    const double i_dc = ch.beta * i_b;
    return params.fill_factor * t_vlc * i_dc * params.v_t * std::log1p(i_dc / params.i_0);
}

double harvest_phase2(double t_rf, const ChannelState& ch, const SystemParams& params) {
    return harvest_phase1(t_rf, params.i_max, ch, params);
}

double total_harvest(double t_vlc, double i_b, double e2_prev, const ChannelState& ch,
                     const SystemParams& params) {
    return harvest_phase1(t_vlc, i_b, ch, params) + e2_prev;
}

double rf_rate(double t_rf, double e_h, const ChannelState& ch, const SystemParams& params) {
    if (t_rf <= 0.0) return 0.0;
    return t_rf * params.b_rf * std::log2(1.0 + ch.zeta * e_h / t_rf);
}

}  // namespace lumilink
