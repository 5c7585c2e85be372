#pragma once

#include <vector>

namespace dirac_nodal {

/// Least-squares slope of log(y) against log(x). Pairs with non-positive entries are
/// skipped; NaN when fewer than two pairs remain.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Theil-Sen (median of pairwise slopes) version of log_log_slope, robust to a few
/// outlying rows.
double log_log_slope_robust(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace dirac_nodal
