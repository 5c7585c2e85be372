#include "dirac_nodal/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dirac_nodal/error.hpp"
#include "dirac_nodal/fit.hpp"
#include "dirac_nodal/nodes.hpp"
#include "dirac_nodal/reconstruction.hpp"

namespace dirac_nodal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_same_case(const GridSequence& x, const GridSequence& y) {
    if (x.problem_case() != y.problem_case()) {
        fail(ErrorKind::case_mismatch, "grid sequences belong to different boundary problems");
    }
}

void require_same_size(std::span<const double> a, std::span<const double> b, int n) {
    if (a.size() != b.size()) {
        std::ostringstream os;
        os << "rows at n = " << n << " have " << a.size() << " and " << b.size() << " entries";
        fail(ErrorKind::row_mismatch, os.str());
    }
}

double median(std::vector<double> v) {
    if (v.empty()) return kNaN;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double m = v[mid];
    if (v.size() % 2 == 0) m = 0.5 * (m + *std::max_element(v.begin(), v.begin() + mid));
    return m;
}

std::vector<int> sorted_window(const std::vector<int>& window) {
    std::vector<int> w(window);
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    if (w.empty()) fail(ErrorKind::invalid_argument, "n window is empty");
    return w;
}

}  // namespace

double s_n_weight(ProblemCase problem_case, int n, double mass, std::size_t lengths) {
    const double m2 = mass * mass;
    if (problem_case == ProblemCase::param_dependent) {
        if (double(n) < std::abs(mass) / std::numbers::sqrt2 + 2.0 || n <= 2) {
            std::ostringstream os;
            os << "S_n weight needs n >= m/sqrt(2) + 2 (n = " << n << ", m = " << mass << ")";
            fail(ErrorKind::invalid_argument, os.str());
        }
        return kPi * (double(n - 2) - m2 / (2.0 * double(n - 2)));
    }
    const double w = lengths >= 2 ? kPi * double(n) : kPi * (double(n) - m2 / (2.0 * double(n)));
    if (n <= 0 || !(w > 0.0)) {
        std::ostringstream os;
        os << "S_n weight is not positive at n = " << n << ", m = " << mass;
        fail(ErrorKind::invalid_argument, os.str());
    }
    return w;
}

double s_n(const GridSequence& x, const GridSequence& y, int n, double mass) {
    require_same_case(x, y);
    const auto a = x.lengths(n);
    const auto b = y.lengths(n);
    require_same_size(x.row(n), y.row(n), n);
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) sum += std::abs(a[k] - b[k]);
    return s_n_weight(x.problem_case(), n, mass, a.size()) * sum;
}

D0Estimate d0_estimate(const GridSequence& x, const GridSequence& y, const std::vector<int>& window,
                       double mass, const D0Config& config) {
    D0Estimate e;
    if (x.problem_case() != y.problem_case()) {
        e.case_mismatch = true;
        e.infinite = true;
        e.d0 = std::numeric_limits<double>::infinity();
        return e;
    }
    const auto w = sorted_window(window);
    for (int n : w) e.table.push_back({n, s_n(x, y, n, mass)});
    const std::size_t start = e.table.size() / 2;
    for (std::size_t k = start; k < e.table.size(); ++k) e.d0 = std::max(e.d0, e.table[k].s);
    if (e.d0 > config.ceiling) {
        std::vector<double> ns, ss;
        for (const auto& row : e.table) {
            ns.push_back(row.n);
            ss.push_back(row.s);
        }
        const double slope = log_log_slope(ns, ss);
        if (slope > 0.0) {
            e.infinite = true;
            e.d0 = std::numeric_limits<double>::infinity();
        }
    }
    return e;
}

long double d_sigma_from_d0(long double d0) {
    if (std::isnan(d0) || d0 < 0.0L) fail(ErrorKind::invalid_argument, "d0 must be non-negative");
    if (std::isinf(d0)) return 1.0L;
    return d0 / (1.0L + d0);
}

long double d0_from_d_sigma(long double d_sigma) {
    if (std::isnan(d_sigma) || d_sigma < 0.0L || d_sigma > 1.0L) {
        fail(ErrorKind::invalid_argument, "d_sigma must lie in [0, 1]");
    }
    if (d_sigma == 1.0L) return std::numeric_limits<long double>::infinity();
    return d_sigma / (1.0L - d_sigma);
}

double d_sigma(const D0Estimate& estimate) {
    if (estimate.case_mismatch || estimate.infinite) return 1.0;
    return static_cast<double>(d_sigma_from_d0(estimate.d0));
}

std::vector<double> grid_diff_chi(const GridSequence& x, const GridSequence& y, int n) {
    const auto a = x.row(n);
    const auto b = y.row(n);
    require_same_size(a, b, n);
    std::vector<double> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::abs(a[k] - b[k]);
    return out;
}

int index_functions_diff(const GridSequence& x, const GridSequence& y, int n, double at) {
    const auto count = [at](std::span<const double> r) {
        return static_cast<int>(std::upper_bound(r.begin(), r.end(), at) - r.begin());
    };
    return std::abs(count(x.row(n)) - count(y.row(n)));
}

QuasinodalReport quasinodal_check(const GridSequence& x, const DiracProblem& problem, const std::vector<int>& window,
                                  const QuasinodalConfig& config) {
    QuasinodalReport r;
    r.constant = config.admissibility_constant;
    std::vector<int> w;
    for (int n : window) {
        if (x.has_row(n)) w.push_back(n);
    }
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());

    const double shift = mean_shift(problem.potential(), problem.boundary());
    std::vector<double> ns, devs, errs;
    for (int n : w) {
        QuasinodalRow row;
        row.n = n;
        const double lh = integer_lambda(x.problem_case(), n);
        const auto pts = x.row(n);
        double worst = 0.0;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            worst = std::max(worst, std::abs(pts[k] - double(k + 1) * kPi / lh));
        }
        row.scaled_deviation = double(n) * worst;
        row.l1_error = kNaN;
        if (lh > 0.0 && pts.size() >= 2) {
            try {
                const NodalSet set(n, 1, {pts.begin(), pts.end()});
                const auto f = reconstruct_step(set, problem, lh, ReconstructionMode::corrected);
                row.l1_error = l1_error(f, problem.potential(), shift);
            } catch (const Error&) {
                row.l1_error = kNaN;
            }
        }
        ns.push_back(n);
        devs.push_back(row.scaled_deviation);
        errs.push_back(row.l1_error);
        r.rows.push_back(row);
    }
    if (r.rows.empty()) return r;

    r.measured_sup = *std::max_element(devs.begin(), devs.end());
    r.bounded = r.measured_sup <= r.constant;
    r.growth_slope = ns.size() >= 2 ? log_log_slope_robust(ns, devs) : 0.0;
    const bool grows = std::isfinite(r.growth_slope) && r.growth_slope > config.max_growth_slope;
    r.asymptotics_pass = r.bounded && !grows;

    const double med = median(devs);
    for (auto& row : r.rows) {
        if (med > 0.0 && row.scaled_deviation > config.outlier_factor * med) {
            row.flagged = true;
            r.flagged_rows.push_back(row.n);
        }
    }

    r.l1_slope = log_log_slope_robust(ns, errs);
    const bool finite_errs = std::all_of(errs.begin(), errs.end(), [](double e) { return std::isfinite(e); });
    r.l1_decreasing = finite_errs && errs.size() >= 2 && errs.back() < errs.front() &&
                      std::isfinite(r.l1_slope) && r.l1_slope < 0.0;
    r.pass = r.asymptotics_pass && r.l1_decreasing;
    return r;
}

PseudometricAudit pseudometric_audit(const std::vector<GridSequence>& samples, const std::vector<int>& window,
                                     double mass) {
    if (samples.size() < 3) fail(ErrorKind::invalid_argument, "pseudometric audit needs at least three sequences");
    const std::size_t count = samples.size();
    std::vector<std::vector<double>> d(count, std::vector<double>(count, 0.0));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) d[i][j] = d_sigma(d0_estimate(samples[i], samples[j], window, mass));
    }

    PseudometricAudit a;
    a.worst_triangle_margin = std::numeric_limits<double>::infinity();
    a.worst_sn_triangle_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
        a.max_self_distance = std::max(a.max_self_distance, d[i][i]);
        for (std::size_t j = 0; j < count; ++j) a.max_asymmetry = std::max(a.max_asymmetry, std::abs(d[i][j] - d[j][i]));
    }

    const auto w = sorted_window(window);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            for (std::size_t k = 0; k < count; ++k) {
                if (i == j || j == k || i == k) continue;
                ++a.triples;
                a.worst_triangle_margin = std::min(a.worst_triangle_margin, d[i][j] + d[j][k] - d[i][k]);
                if (samples[i].problem_case() != samples[j].problem_case() ||
                    samples[j].problem_case() != samples[k].problem_case()) {
                    continue;
                }
                for (int n : w) {
                    const double margin = s_n(samples[i], samples[j], n, mass) +
                                          s_n(samples[j], samples[k], n, mass) - s_n(samples[i], samples[k], n, mass);
                    a.worst_sn_triangle_margin = std::min(a.worst_sn_triangle_margin, margin);
                }
            }
        }
    }
    a.pass = a.max_self_distance == 0.0 && a.max_asymmetry == 0.0 && a.worst_triangle_margin >= -kTriangleEpsilon &&
             a.worst_sn_triangle_margin >= -kTriangleEpsilon;
    return a;
}

GridSequence nodal_grid_sequence(const Shooter& shooter, const std::vector<int>& window,
                                 const EigenSearchConfig& search) {
    std::map<int, std::vector<double>> rows;
    for (int n : sorted_window(window)) {
        const auto rec = find_eigenvalue(shooter, n, search);
        const auto set = extract_nodes(shooter, rec, 1);
        rows[n] = {set.points().begin(), set.points().end()};
    }
    return GridSequence(shooter.problem().problem_case(), std::move(rows));
}

StabilityReport stability_identity_report(const GridSequence& x, const GridSequence& y, const DiracProblem& a,
                                          const DiracProblem& b, const std::vector<int>& window) {
    StabilityReport r;
    r.d0 = d0_estimate(x, y, window, a.mass());
    r.d_sigma = d_sigma(r.d0);
    if (r.d0.case_mismatch) {
        r.verdict = "case_mismatch";
        return r;
    }
    r.norm_corrected = l1_distance(a.potential(), b.potential(), mean_shift(a.potential(), a.boundary()),
                                   mean_shift(b.potential(), b.boundary()));
    r.norm_paper_exact = l1_distance(a.potential(), b.potential());
    // below this the mean-adjusted potentials are the same function up to quadrature noise
    constexpr double kNormFloor = 1e-9;
    r.ratio_defined = r.norm_corrected > kNormFloor;
    for (const auto& e : r.d0.table) {
        StabilityRow row;
        row.n = e.n;
        row.s = e.s;
        row.ratio_corrected = r.ratio_defined ? (e.s / kPi) / r.norm_corrected : kNaN;
        row.ratio_paper_exact = r.norm_paper_exact > kNormFloor ? e.s / r.norm_paper_exact : kNaN;
        r.rows.push_back(row);
    }
    if (!r.ratio_defined) {
        r.trend_non_increasing = true;
        r.verdict = "degenerate";
        return r;
    }
    r.trend_non_increasing = true;
    for (std::size_t k = 1; k < r.rows.size(); ++k) {
        if (std::abs(r.rows[k].ratio_corrected - 1.0) > std::abs(r.rows[k - 1].ratio_corrected - 1.0) + 1e-12) {
            r.trend_non_increasing = false;
        }
    }
    const double last = r.rows.empty() ? kNaN : r.rows.back().ratio_corrected;
    r.verdict = std::abs(last - 1.0) <= 0.15 ? "identity_holds" : "identity_violated";
    return r;
}

StabilityReport stability_identity_report(const DiracProblem& a, const DiracProblem& b,
                                          const std::vector<int>& window, const IntegratorConfig& integrator,
                                          const EigenSearchConfig& search) {
    const auto x = nodal_grid_sequence(Shooter(a, integrator), window, search);
    const auto y = nodal_grid_sequence(Shooter(b, integrator), window, search);
    return stability_identity_report(x, y, a, b, window);
}

}  // namespace dirac_nodal
