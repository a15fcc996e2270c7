#include "lumilink/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace lumilink {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

namespace {

// Quotes a field only when RFC 4180 requires it.
std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string format_results_csv(const ExperimentTable& table) {
    std::string out = kResultsCsvHeader;
    out += "\r\n";
    for (const auto& row : table.rows) {
        out += std::to_string(row.case_index);
        out += ',' + csv_field(row.d_r);
        out += ',' + csv_field(row.d_u);
        out += ',' + format_double(row.f_c);
        out += ',' + format_double(row.rate_mean);
        out += ',' + format_double(row.rate_se);
        out += ',' + format_double(row.ib_mean);
        out += ',' + format_double(row.tvlc_mean);
        out += ',' + format_double(row.outage_frac);
        out += ',' + std::to_string(row.n_trials);
        out += "\r\n";
    }
    return out;
}

std::string format_outcome(const OptimizeOutcome& outcome) {
    const auto& d = outcome.decision;
    int mm_iterations = 0;
    for (const auto& trace : outcome.mm_traces) mm_iterations += trace.iterations;
    std::ostringstream os;
    os << "i_b      = " << format_double(d.i_b) << " A\n"
       << "t_vlc    = " << format_double(d.t_vlc) << "\n"
       << "t_rf     = " << format_double(d.t_rf) << "\n"
       << "amp      = " << format_double(d.amp) << " A\n"
       << "E_h      = " << format_double(d.e_h) << " J\n"
       << "R_VLC    = " << format_double(d.r_vlc) << " bit/s\n"
       << "R_RF     = " << format_double(d.r_rf) << " bit/s\n"
       << "R_e2e    = " << format_double(d.r_e2e) << " bit/s\n"
       << "E2_next  = " << format_double(d.e2_next) << " J\n"
       << "feasible = " << (d.feasible ? "yes" : "no") << "\n"
       << "mm_iterations = " << mm_iterations << " (" << outcome.mm_traces.size() << " runs)\n"
       << "cycles   = " << outcome.cycles << "\n";
    return os.str();
}

}  // namespace lumilink
