#pragma once

#include <string>

#include "lumilink/optimizer.hpp"
#include "lumilink/sim.hpp"

namespace lumilink {

inline constexpr const char* kResultsCsvHeader =
    "case,d_r,d_u,f_c,rate_mean,rate_se,ib_mean,tvlc_mean,outage_frac,n_trials";

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// RFC 4180 CSV with CRLF line endings and kResultsCsvHeader.
std::string format_results_csv(const ExperimentTable& table);

/// Single-block summary for the console.
std::string format_outcome(const OptimizeOutcome& outcome);

}  // namespace lumilink
