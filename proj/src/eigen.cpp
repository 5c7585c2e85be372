#include "dirac_nodal/eigen.hpp"

#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "dirac_nodal/asymptotics.hpp"
#include "dirac_nodal/error.hpp"

namespace dirac_nodal {

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

struct Refined {
    double lambda;
    Bracket bracket;
    double f_lo;
    double f_hi;
};

// TOMS 748 on a bracket with known end values; stops when the bracket is narrower
// than the tolerance.
template <class F>
Refined refine(F&& f, double lo, double hi, double f_lo, double f_hi, double tol, int max_iterations) {
    std::uintmax_t iters = static_cast<std::uintmax_t>(max_iterations);
    const auto stop = [tol](double a, double b) { return std::abs(b - a) <= tol; };
    const auto r = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, stop, iters);
    if (iters >= static_cast<std::uintmax_t>(max_iterations) && !stop(r.first, r.second)) {
        fail(ErrorKind::iteration_failure, "root refinement exhausted its iteration budget");
    }
    // toms748 only returns the bracket; re-evaluate the ends for the secant slope
    const double a = r.first;
    const double b = r.second;
    return {0.5 * (a + b), {a, b}, a == lo ? f_lo : f(a), b == hi ? f_hi : f(b)};
}

}  // namespace

void EigenSearchConfig::validate() const {
    if (!(lambda_tolerance > 0.0)) fail(ErrorKind::invalid_argument, "lambda_tolerance must be positive");
    if (!(bracket_half_width > 0.0)) fail(ErrorKind::invalid_argument, "bracket half-width must be positive");
    if (scan_points < 3) fail(ErrorKind::invalid_argument, "scan needs at least 3 points");
    if (max_iterations < 1) fail(ErrorKind::invalid_argument, "max_iterations must be positive");
}

double eigen_seed(const DiracProblem& problem, int n, bool strict) {
    try {
        return lambda_asym(problem, n, 2);
    } catch (const Error& e) {
        if (strict || e.kind() != ErrorKind::constants_unavailable) throw;
        return lambda_asym(problem, n, 1);
    }
}

EigenRecord find_eigenvalue(const Shooter& shooter, int n, const EigenSearchConfig& config) {
    config.validate();
    const double seed = eigen_seed(shooter.problem(), n, config.strict_seed);
    const double lo = seed - config.bracket_half_width;
    const double hi = seed + config.bracket_half_width;
    const int count = config.scan_points;

    std::vector<double> grid(count);
    std::vector<double> values(count);
    for (int i = 0; i < count; ++i) {
        grid[i] = (i + 1 == count) ? hi : lo + (hi - lo) * double(i) / double(count - 1);
        values[i] = shooter.characteristic(grid[i]);
    }

    std::vector<int> exact;
    std::vector<int> changes;
    for (int i = 0; i < count; ++i) {
        if (values[i] == 0.0) exact.push_back(i);
        if (i + 1 < count && sign_of(values[i]) * sign_of(values[i + 1]) < 0) changes.push_back(i);
    }
    const std::size_t roots = exact.size() + changes.size();
    if (roots == 0) {
        std::ostringstream os;
        os << "no sign change of the characteristic function for n = " << n << " in [" << lo << ", " << hi
           << "]";
        fail(ErrorKind::seed_failure, os.str());
    }
    if (roots > 1) {
        std::ostringstream os;
        os << roots << " roots of the characteristic function for n = " << n << " in [" << lo << ", " << hi
           << "]";
        fail(ErrorKind::ambiguous_bracket, os.str());
    }

    EigenRecord rec;
    rec.index = n;
    if (!exact.empty()) {
        const int i = exact.front();
        rec.lambda = grid[i];
        rec.bracket = {grid[i], grid[i]};
        const int a = i > 0 ? i - 1 : i;
        const int b = i + 1 < count ? i + 1 : i;
        rec.slope = (values[b] - values[a]) / (grid[b] - grid[a]);
        rec.residual = 0.0;
        return rec;
    }
    const int i = changes.front();
    const auto f = [&shooter](double l) { return shooter.characteristic(l); };
    const auto r = refine(f, grid[i], grid[i + 1], values[i], values[i + 1], config.lambda_tolerance,
                          config.max_iterations);
    rec.lambda = r.lambda;
    rec.bracket = r.bracket;
    rec.slope = r.bracket.hi > r.bracket.lo ? (r.f_hi - r.f_lo) / (r.bracket.hi - r.bracket.lo) : 0.0;
    rec.residual = shooter.characteristic(rec.lambda);
    return rec;
}

EigenRecord find_eigenvalue(const DiracProblem& problem, int n, const EigenSearchConfig& config,
                            const IntegratorConfig& integrator) {
    return find_eigenvalue(Shooter(problem, integrator), n, config);
}

void check_ordering(const std::vector<EigenRecord>& records) {
    for (std::size_t k = 1; k < records.size(); ++k) {
        if (records[k].index > records[k - 1].index && !(records[k].lambda > records[k - 1].lambda)) {
            std::ostringstream os;
            os << "eigenvalues labelled " << records[k - 1].index << " and " << records[k].index
               << " are not strictly increasing";
            fail(ErrorKind::ambiguous_bracket, os.str());
        }
    }
}

std::vector<double> find_unmatched_roots(const Shooter& shooter, const std::vector<EigenRecord>& records,
                                         const EigenSearchConfig& config) {
    // Probe spacing well below the unit eigenvalue gap; an offset keeps the probes
    // clear of the labelled roots themselves.
    constexpr double kProbe = 0.05;
    std::vector<double> out;
    const auto f = [&shooter](double l) { return shooter.characteristic(l); };
    for (std::size_t k = 1; k < records.size(); ++k) {
        const double a = records[k - 1].bracket.hi;
        const double b = records[k].bracket.lo;
        const double margin = std::max(10.0 * config.lambda_tolerance, 1e-6);
        const double lo = a + margin;
        const double hi = b - margin;
        if (!(hi > lo)) continue;
        const int pieces = std::max(2, static_cast<int>(std::ceil((hi - lo) / kProbe)));
        double x0 = lo;
        double f0 = f(x0);
        for (int p = 1; p <= pieces; ++p) {
            const double x1 = (p == pieces) ? hi : lo + (hi - lo) * double(p) / double(pieces);
            const double f1 = f(x1);
            if (f1 == 0.0) {
                out.push_back(x1);
            } else if (sign_of(f0) * sign_of(f1) < 0) {
                out.push_back(refine(f, x0, x1, f0, f1, config.lambda_tolerance, config.max_iterations).lambda);
            }
            x0 = x1;
            f0 = f1;
        }
    }
    return out;
}

Spectrum find_spectrum(const Shooter& shooter, int n_min, int n_max, const EigenSearchConfig& config) {
    if (n_min > n_max) fail(ErrorKind::invalid_argument, "n_min must not exceed n_max");
    Spectrum s;
    for (int n = n_min; n <= n_max; ++n) {
        if (n == 0) continue;
        s.records.push_back(find_eigenvalue(shooter, n, config));
    }
    check_ordering(s.records);
    s.unmatched = find_unmatched_roots(shooter, s.records, config);
    return s;
}

}  // namespace dirac_nodal
