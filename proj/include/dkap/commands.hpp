#pragma once

// Table-producing commands behind the CLI subcommands.

#include <string>

#include "dkap/appell.hpp"
#include "dkap/config.hpp"
#include "dkap/table.hpp"

namespace dkap {

/// Family for a route name and variant (empty variant selects the default).
/// ConfigError for unknown routes or variants.
PolyFamily build_family(const Config& config, const std::string& route, const std::string& variant);

/// Rows (route, n, degree, coefficients).
Table polys_table(const Config& config, const std::string& route, const std::string& variant);

/// Rows (m, canonical, literal, truncated_sum, gap) for m = 0..n_max.
Table moments_table(const Config& config);

/// Rows (n, count, frequency, pmf, residual) and a summary with the mean,
/// its standard error, the exact mean and the total-variation distance.
Table sample_table(const Config& config, long count);

}  // namespace dkap
