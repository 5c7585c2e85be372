#include "dirac_nodal/reconstruction.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "dirac_nodal/asymptotics.hpp"
#include "dirac_nodal/error.hpp"

namespace dirac_nodal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kAnalyticCells = 8192;

// Abscissae on which every integrand of l1_error / l1_distance is linear (or, for
// analytic potentials, close enough to linear).
void add_potential_grid(const Potential& v, std::vector<double>& grid) {
    if (v.is_sampled()) {
        const std::size_t cells = v.samples().size() - 1;
        for (std::size_t k = 0; k <= cells; ++k) grid.push_back(kDomainLength * double(k) / double(cells));
    } else {
        for (int k = 0; k <= kAnalyticCells; ++k) grid.push_back(kDomainLength * double(k) / kAnalyticCells);
        for (double b : v.breakpoints()) grid.push_back(b);
    }
}

std::vector<double> finish_grid(std::vector<double> grid) {
    grid.push_back(0.0);
    grid.push_back(kDomainLength);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

double abs_linear_integral(double p, double q, double width) {
    if (p * q >= 0.0) return 0.5 * (std::abs(p) + std::abs(q)) * width;
    return (p * p + q * q) / (2.0 * (std::abs(p) + std::abs(q))) * width;
}

// Integral of |g| over the grid, with g sampled just inside each cell so that jumps
// at cell boundaries are taken from the correct side.
template <class G>
double integrate_abs(const std::vector<double>& grid, G&& g) {
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double a = grid[k];
        const double b = grid[k + 1];
        const double w = b - a;
        if (!(w > 0.0)) continue;
        const double d = 1e-9 * w;
        const double ga = g(a + d, 0.5 * (a + b));
        const double gb = g(b - d, 0.5 * (a + b));
        const double slope = (gb - ga) / (w - 2.0 * d);
        total += abs_linear_integral(ga - slope * d, gb + slope * d, w);
    }
    return total;
}

}  // namespace

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() < 2 || values_.size() + 1 != breakpoints_.size()) {
        fail(ErrorKind::invalid_argument, "step function needs one value per interval");
    }
    for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
        if (!(breakpoints_[k] > breakpoints_[k - 1])) {
            fail(ErrorKind::invalid_argument, "step function breakpoints must be strictly increasing");
        }
    }
}

double StepFunction::operator()(double x) const {
    if (x < breakpoints_.front() || x > breakpoints_.back()) {
        fail(ErrorKind::invalid_argument, "step function evaluated outside its domain");
    }
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t k = static_cast<std::size_t>(it - breakpoints_.begin());
    k = std::min(k == 0 ? 0 : k - 1, values_.size() - 1);
    return values_[k];
}

double StepFunction::l1_norm() const {
    double total = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        total += std::abs(values_[k]) * (breakpoints_[k + 1] - breakpoints_[k]);
    }
    return total;
}

int jn_index(const NodalSet& nodes, double x) {
    const auto pts = nodes.points();
    return static_cast<int>(std::upper_bound(pts.begin(), pts.end(), x) - pts.begin());
}

double lambda_hat(const DiracProblem& problem, int n, LambdaSource source, std::optional<double> numeric) {
    switch (source) {
        case LambdaSource::integer_seed:
            return integer_lambda(problem.problem_case(), n);
        case LambdaSource::asymptotic:
            return lambda_asym(problem, n, 2);
        case LambdaSource::numeric:
            if (!numeric) fail(ErrorKind::invalid_argument, "numeric lambda source needs a solver eigenvalue");
            return *numeric;
    }
    fail(ErrorKind::invalid_argument, "unknown lambda source");
}

double reconstruction_value(const DiracProblem& problem, double lh, double left, double right, int j,
                            ReconstructionMode mode) {
    if (!(lh > 0.0)) fail(ErrorKind::invalid_argument, "lambda-hat must be positive");
    const double m = problem.mass();
    const double l = right - left;
    const double case_one = lh * (lh * l - m * m * l / (2.0 * lh) - kPi);
    if (mode == ReconstructionMode::corrected) return case_one / kPi;
    if (!problem.boundary().is_classical()) return case_one;
    const double s = (j % 2 == 0) ? 1.0 : -1.0;
    return lh * (lh * l + s * m * m * (left + right) / (2.0 * lh) - kPi) +
           s * m * std::sin(2.0 * problem.boundary().alpha());
}

StepFunction reconstruct_step(const NodalSet& nodes, const DiracProblem& problem, double lh,
                              ReconstructionMode mode) {
    const auto pts = nodes.points();
    if (pts.size() < 2) fail(ErrorKind::invalid_argument, "reconstruction needs at least two nodes");
    std::vector<double> breaks;
    breaks.reserve(pts.size() + 2);
    breaks.push_back(0.0);
    breaks.insert(breaks.end(), pts.begin(), pts.end());
    breaks.push_back(kDomainLength);

    std::vector<double> values;
    values.reserve(pts.size() + 1);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        values.push_back(reconstruction_value(problem, lh, pts[k], pts[k + 1], static_cast<int>(k) + 1, mode));
    }
    values.insert(values.begin(), values.front());
    values.push_back(values.back());
    return StepFunction(std::move(breaks), std::move(values));
}

LocalAverage local_average_limit(const Potential& potential, const NodalSet& nodes, double lambda, double x) {
    const int j = jn_index(nodes, x);
    if (j < 1 || j >= static_cast<int>(nodes.size())) {
        fail(ErrorKind::invalid_argument, "x must lie between the first and the last node");
    }
    const double a = nodes.points()[std::size_t(j) - 1];
    const double b = nodes.points()[std::size_t(j)];
    using boost::math::quadrature::gauss_kronrod;
    const auto kernel = [&](double w) {
        return gauss_kronrod<double, 61>::integrate(
            [&](double t) { return std::cos(w * t) * potential(t); }, a, b, 10, 1e-13);
    };
    LocalAverage out;
    out.average = lambda * potential.integral(a, b);
    out.oscillatory = lambda * kernel(2.0 * lambda);
    out.oscillatory_pi_kernel = lambda * kernel(2.0 * lambda * kPi);
    return out;
}

double mean_shift(const Potential& potential, const BoundaryForm& boundary) {
    return (potential.total() + boundary.beta() - boundary.alpha()) / kPi;
}

double l1_error(const StepFunction& f, const Potential& potential, double shift) {
    std::vector<double> grid(f.breakpoints());
    add_potential_grid(potential, grid);
    grid = finish_grid(std::move(grid));
    return integrate_abs(grid, [&](double x, double mid) { return f(mid) - (potential(x) - shift); });
}

double l1_distance(const Potential& a, const Potential& b, double shift_a, double shift_b) {
    std::vector<double> grid;
    add_potential_grid(a, grid);
    add_potential_grid(b, grid);
    grid = finish_grid(std::move(grid));
    return integrate_abs(grid, [&](double x, double) { return (a(x) - shift_a) - (b(x) - shift_b); });
}

}  // namespace dirac_nodal
