#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "dirac_nodal/eigen.hpp"
#include "dirac_nodal/integrator.hpp"
#include "dirac_nodal/model.hpp"

namespace dirac_nodal {

/// Weighted l1 distance of the grid-length rows at index n.
///
/// Case I weight: pi [n - 2 - m^2 / (2 (n - 2))], defined for n >= m/sqrt(2) + 2.
/// Case II weight: pi n (parity average) when the row has at least two lengths,
/// pi [n - m^2 / (2 n)] otherwise; the weight must be positive.
/// CaseMismatch for sequences of different cases, RowMismatch for rows of unequal size.
double s_n(const GridSequence& x, const GridSequence& y, int n, double mass);

/// Weight multiplying sum_k |L_k - Lbar_k| in s_n.
double s_n_weight(ProblemCase problem_case, int n, double mass, std::size_t lengths);

struct D0Config {
    double ceiling = 1e6;  ///< above this, with a growing tail, d0 is reported as infinite
};

struct SnEntry {
    int n = 0;
    double s = 0.0;
};

struct D0Estimate {
    double d0 = 0.0;
    bool infinite = false;
    bool case_mismatch = false;
    std::vector<SnEntry> table;  ///< S_n over the whole window
};

/// Max of S_n over the upper half of the window (a finite-n stand-in for the lim sup).
/// Sequences of different cases are not compared: the result is infinite with
/// case_mismatch set.
D0Estimate d0_estimate(const GridSequence& x, const GridSequence& y, const std::vector<int>& window,
                       double mass, const D0Config& config = {});

/// d0 / (1 + d0), or 1 for infinite d0. Extended precision so that the round trip
/// with d0_from_d_sigma is exact to ~1e-16 even for large d0.
long double d_sigma_from_d0(long double d0);
/// d_sigma / (1 - d_sigma), infinite at 1. Requires 0 <= d_sigma <= 1.
long double d0_from_d_sigma(long double d_sigma);
double d_sigma(const D0Estimate& estimate);

/// |X_k^n - Xbar_k^n| for every k.
std::vector<double> grid_diff_chi(const GridSequence& x, const GridSequence& y, int n);

/// |J_n(x) - Jbar_n(x)| with J_n(x) = max{k : X_k^n <= x} (0 before the first entry).
int index_functions_diff(const GridSequence& x, const GridSequence& y, int n, double at);

struct QuasinodalConfig {
    double admissibility_constant = 10.0 * std::numbers::pi;
    /// Fitted growth exponent of n * max_k |X_k - k pi / lh| above which the
    /// deviation is judged not to be O(1/n).
    double max_growth_slope = 0.5;
    /// Rows whose scaled deviation exceeds this multiple of the window median are flagged.
    double outlier_factor = 3.0;
};

struct QuasinodalRow {
    int n = 0;
    double scaled_deviation = 0.0;  ///< n max_k |X_k^n - k pi / lh_n|
    double l1_error = 0.0;          ///< reconstruction error against V - v/pi
    bool flagged = false;
};

struct QuasinodalReport {
    std::vector<QuasinodalRow> rows;
    double measured_sup = 0.0;
    double constant = 0.0;
    double growth_slope = 0.0;
    bool bounded = false;
    bool asymptotics_pass = false;
    double l1_slope = 0.0;
    bool l1_decreasing = false;
    std::vector<int> flagged_rows;
    bool pass = false;
};

/// Admissibility of X for (V, m, boundary): bounded and non-growing scaled deviation
/// from k pi / lh, and a decreasing L1 error of the integer-seed corrected approximants
/// against the mean-adjusted potential. Never throws on data.
QuasinodalReport quasinodal_check(const GridSequence& x, const DiracProblem& problem, const std::vector<int>& window,
                                  const QuasinodalConfig& config = {});

struct PseudometricAudit {
    double max_self_distance = 0.0;
    double max_asymmetry = 0.0;
    double worst_triangle_margin = 0.0;      ///< min of d(X,Y) + d(Y,Z) - d(X,Z)
    double worst_sn_triangle_margin = 0.0;   ///< same for S_n at every n of the window
    std::size_t triples = 0;
    bool pass = false;
};

constexpr double kTriangleEpsilon = 1e-12;

/// Pseudometric axioms of d_sigma (built from d0_estimate over `window`) and of S_n.
/// Needs at least three sequences.
PseudometricAudit pseudometric_audit(const std::vector<GridSequence>& samples, const std::vector<int>& window,
                                     double mass);

struct StabilityRow {
    int n = 0;
    double s = 0.0;
    double ratio_corrected = 0.0;    ///< (S_n / pi) / ||(V - v/pi) - (Vbar - vbar/pi)||_1
    double ratio_paper_exact = 0.0;  ///< S_n / ||V - Vbar||_1
};

struct StabilityReport {
    std::vector<StabilityRow> rows;
    D0Estimate d0;
    double d_sigma = 0.0;
    double norm_corrected = 0.0;
    double norm_paper_exact = 0.0;
    /// Ratios are NaN when the corresponding norm vanishes.
    bool ratio_defined = false;
    bool trend_non_increasing = false;
    std::string verdict;
};

/// Grid sequence made of the component-1 nodal sets of the eigenfunctions n in `window`.
GridSequence nodal_grid_sequence(const Shooter& shooter, const std::vector<int>& window,
                                 const EigenSearchConfig& search = {});

/// Identity audit from precomputed nodal grids of problems a and b.
StabilityReport stability_identity_report(const GridSequence& x, const GridSequence& y, const DiracProblem& a,
                                          const DiracProblem& b, const std::vector<int>& window);

/// Solves both problems over the window and audits the identity.
StabilityReport stability_identity_report(const DiracProblem& a, const DiracProblem& b,
                                          const std::vector<int>& window, const IntegratorConfig& integrator = {},
                                          const EigenSearchConfig& search = {});

}  // namespace dirac_nodal
