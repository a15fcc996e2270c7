#include "lumilink/params.hpp"

#include <cmath>

#include "lumilink/error.hpp"

namespace lumilink {

SystemParams default_params() {
    SystemParams p;
    p.p_led = 1.5;
    p.eta = 0.4;
    p.i_min = 0.1;
    p.i_max = 1.0;
    p.b_vlc = 10e6;
    p.b_rf = 10e6;
    p.p0_dbm_per_hz = -174.0;
    p.nf_db = 9.0;
    p.v_t = 25e-3;
    p.i_0 = 1e-10;
    p.q_e = 1.6e-19;
    p.i_amb = 5840e-6;  // listed without unit; amperes fit the shot-noise model
    p.a_p = 1e-4;
    p.h_delta = 2.0;
    p.phi_fov_deg = 60.0;
    p.theta_half_deg = 60.0;
    p.fill_factor = 0.75;
    p.r_th = 1e6;
    p.pl_exponent = 1.8;
    p.d0 = 1.0;
    return p;
}

SolverSettings default_settings() { return SolverSettings{}; }

namespace {

void require_positive(std::vector<std::string>& errors, const char* name, double value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        errors.push_back(std::string(name) + " must be finite and > 0");
    }
}

void require_finite(std::vector<std::string>& errors, const char* name, double value) {
    if (!std::isfinite(value)) errors.push_back(std::string(name) + " must be finite");
}

}  // namespace

std::vector<std::string> validate(const SystemParams& p) {
    std::vector<std::string> errors;
    require_positive(errors, "p_led", p.p_led);
    require_positive(errors, "eta", p.eta);
    require_positive(errors, "i_min", p.i_min);
    require_positive(errors, "i_max", p.i_max);
    if (!(p.i_min < p.i_max)) errors.push_back("i_min < i_max violated");
    require_positive(errors, "b_vlc", p.b_vlc);
    require_positive(errors, "b_rf", p.b_rf);
    require_finite(errors, "p0_dbm_per_hz", p.p0_dbm_per_hz);
    require_finite(errors, "nf_db", p.nf_db);
    require_positive(errors, "v_t", p.v_t);
    require_positive(errors, "i_0", p.i_0);
    require_positive(errors, "q_e", p.q_e);
    require_positive(errors, "i_amb", p.i_amb);
    require_positive(errors, "a_p", p.a_p);
    require_positive(errors, "h_delta", p.h_delta);
    if (!(p.theta_half_deg > 0.0 && p.theta_half_deg < 90.0)) {
        errors.push_back("theta_half_deg must lie in (0, 90)");
    }
    if (!(p.phi_fov_deg > 0.0 && p.phi_fov_deg <= 90.0)) {
        errors.push_back("phi_fov_deg must lie in (0, 90]");
    }
    require_positive(errors, "fill_factor", p.fill_factor);
    if (!(p.r_th >= 0.0) || !std::isfinite(p.r_th)) errors.push_back("r_th must be finite and >= 0");
    if (!(p.pl_exponent >= 1.0 && p.pl_exponent <= 3.0)) {
        errors.push_back("pl_exponent must lie in [1, 3]");
    }
    require_positive(errors, "d0", p.d0);
    return errors;
}

std::vector<std::string> validate(const SolverSettings& s) {
    std::vector<std::string> errors;
    require_positive(errors, "mm_tol", s.mm_tol);
    if (s.mm_max_iter < 1) errors.push_back("mm_max_iter must be >= 1");
    require_positive(errors, "alt_rel_tol", s.alt_rel_tol);
    if (s.alt_max_cycles < 1) errors.push_back("alt_max_cycles must be >= 1");
    require_positive(errors, "line_search_tol", s.line_search_tol);
    if (s.oracle_grid < 3) errors.push_back("oracle_grid must be >= 3");
    return errors;
}

std::string to_string(VlcObjective objective) {
    return objective == VlcObjective::exact ? "exact" : "high_snr";
}

VlcObjective vlc_objective_from_string(const std::string& text) {
    if (text == "exact") return VlcObjective::exact;
    if (text == "high_snr") return VlcObjective::high_snr;
    throw ConfigError("vlc_objective must be \"exact\" or \"high_snr\", got \"" + text + "\"");
}

}  // namespace lumilink
