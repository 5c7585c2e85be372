#include "dirac_nodal/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dirac_nodal/error.hpp"

namespace dirac_nodal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFixedPointTolerance = 1e-12;
constexpr int kFixedPointIterations = 50;
constexpr double kSingularCosine = 1e-12;

double parity(int j) { return (j % 2 == 0) ? 1.0 : -1.0; }

double integral_to(const Potential& v, double x) { return v.cumulative(std::clamp(x, 0.0, kDomainLength)); }

template <class Map>
double fixed_point(Map&& g, double x0, int j) {
    double x = x0;
    for (int it = 0; it < kFixedPointIterations; ++it) {
        const double next = g(x);
        if (!std::isfinite(next)) break;
        if (std::abs(next - x) < kFixedPointTolerance) return next;
        x = next;
    }
    std::ostringstream os;
    os << "nodal point fixed-point iteration did not converge for j = " << j;
    fail(ErrorKind::iteration_failure, os.str());
}

void check_component(const DiracProblem& problem, int component) {
    if (component != 1 && component != 2) fail(ErrorKind::invalid_argument, "component must be 1 or 2");
    if (component == 2 && !problem.boundary().is_classical()) {
        fail(ErrorKind::unsupported, "no nodal expansion for component 2 of the param_dependent problem");
    }
}

void check_order(int order) {
    if (order < 0 || order > 2) fail(ErrorKind::invalid_argument, "expansion order must be 0, 1 or 2");
}

double resolve_lambda(const DiracProblem& problem, int n, std::optional<double> lambda) {
    const double l = lambda ? *lambda : lambda_asym(problem, n, 2);
    if (!(l > 0.0) || !std::isfinite(l)) {
        fail(ErrorKind::invalid_argument, "nodal expansions need a positive eigenvalue");
    }
    return l;
}

}  // namespace

AsymptoticConstants asymptotic_constants(const DiracProblem& problem) {
    const auto& b = problem.boundary();
    const double m = problem.mass();
    const double alpha = b.alpha();
    const double beta = b.beta();
    const double integral = problem.potential().total();
    const double mass_terms = m * (std::sin(2.0 * alpha) - std::sin(2.0 * beta));

    AsymptoticConstants k;
    k.v = integral + beta - alpha;
    if (b.is_classical()) {
        const double cosine = std::cos(integral - alpha + beta);
        const double denom = 2.0 * kPi * cosine * cosine;
        if (cosine * cosine > kSingularCosine) k.c1 = (mass_terms + m * m * kPi) / denom;
    } else {
        k.c = 0.5 * m * m + mass_terms / (2.0 * kPi) + b.left_sign_quantity() / kPi -
              b.right_sign_quantity() / kPi;
    }
    return k;
}

double lambda_asym(const DiracProblem& problem, int n, int order) {
    if (n == 0) fail(ErrorKind::invalid_argument, "eigenvalue index must be non-zero");
    check_order(order);
    const bool classical = problem.boundary().is_classical();
    double value = (!classical && n > 0) ? double(n - 2) : double(n);
    if (order == 0) return value;
    const auto k = asymptotic_constants(problem);
    value += k.v / kPi;
    if (order == 1) return value;
    if (classical) {
        if (!k.c1) {
            fail(ErrorKind::constants_unavailable,
                 "c1 is singular: cos^2(int V - alpha + beta) vanishes");
        }
        return value + *k.c1 / double(n);
    }
    return value + k.c / double(n);
}

double lambda_inverse_series(double v, double c, double s) {
    if (s == 0.0) fail(ErrorKind::invalid_argument, "expansion point must be non-zero");
    return 1.0 / s - v / (s * s * kPi) + (v * v - kPi * kPi * c) / (s * s * s * kPi * kPi);
}

double lambda_inverse_asym(const DiracProblem& problem, int n) {
    const auto k = asymptotic_constants(problem);
    if (problem.boundary().is_classical()) {
        if (n == 0) fail(ErrorKind::invalid_argument, "eigenvalue index must be non-zero");
        if (!k.c1) fail(ErrorKind::constants_unavailable, "c1 is singular");
        return lambda_inverse_series(k.v, *k.c1, double(n));
    }
    if (n < 4) fail(ErrorKind::invalid_argument, "reciprocal expansion needs n >= 4");
    return lambda_inverse_series(k.v, k.c, double(n - 2));
}

double nodal_point_asym(const DiracProblem& problem, int n, int j, int component, int order,
                        std::optional<double> lambda) {
    check_component(problem, component);
    check_order(order);
    const double l = resolve_lambda(problem, n, lambda);
    const double phase = component == 1 ? double(j) * kPi : (double(j) - 0.5) * kPi;
    if (order == 0) return phase / l;

    const auto& v = problem.potential();
    const auto& b = problem.boundary();
    const double m = problem.mass();
    const double alpha = b.alpha();
    const double l2 = 2.0 * l * l;

    if (!b.is_classical()) {
        const double constant = m * std::sin(2.0 * alpha) + 2.0 * b.left_sign_quantity();
        return fixed_point(
            [&](double x) {
                double value = (phase + integral_to(v, x) - alpha) / l;
                if (order == 2) value += (m * m * x + constant) / l2;
                return value;
            },
            phase / l, j);
    }

    const double sine_sign = component == 1 ? parity(j) : -parity(j);
    const double mass_sign = parity(j);
    return fixed_point(
        [&](double x) {
            double value = (phase + integral_to(v, x) - alpha) / l;
            if (order == 2) {
                value += (sine_sign * m * std::sin(2.0 * alpha) + mass_sign * m * m * x) / l2;
            }
            return value;
        },
        phase / l, j);
}

double nodal_point_asym_expanded(const DiracProblem& problem, int n, int j) {
    if (problem.boundary().is_classical()) {
        fail(ErrorKind::unsupported, "the 1/(n-2) expansion belongs to the param_dependent problem");
    }
    if (n < 4) fail(ErrorKind::invalid_argument, "expanded nodal point needs n >= 4");
    const auto k = asymptotic_constants(problem);
    const auto& v = problem.potential();
    const double m = problem.mass();
    const double alpha = problem.boundary().alpha();
    const double s = double(n - 2);
    const double constant = m * std::sin(2.0 * alpha) + 2.0 * problem.boundary().left_sign_quantity();
    const double pi2 = kPi * kPi;
    return fixed_point(
        [&](double x) {
            const double a = double(j) * kPi + integral_to(v, x) - alpha;
            const double bterm = m * m * x + constant;
            return a / s - a * k.v / (s * s * kPi) + bterm / (2.0 * s * s) +
                   a * (k.v * k.v - pi2 * k.c) / (s * s * s * pi2) - k.v * bterm / (s * s * s * pi2);
        },
        double(j) * kPi / s, j);
}

std::vector<AsymptoticNode> nodal_points_asym(const DiracProblem& problem, int n, int component, int order,
                                              std::optional<double> lambda) {
    const double l = resolve_lambda(problem, n, lambda);
    std::vector<AsymptoticNode> out;
    const int last = static_cast<int>(std::ceil(l)) + 3;
    for (int j = -2; j <= last; ++j) {
        const double x = nodal_point_asym(problem, n, j, component, order, l);
        if (x > 0.0 && x < kDomainLength) out.push_back({j, x});
    }
    return out;
}

double nodal_length_asym(const DiracProblem& problem, int n, int j, int component, int order,
                         std::optional<double> lambda, LengthExpansion form) {
    check_component(problem, component);
    check_order(order);
    const double l = resolve_lambda(problem, n, lambda);
    const double left = nodal_point_asym(problem, n, j, component, order, l);
    const double right = nodal_point_asym(problem, n, j + 1, component, order, l);
    if (form == LengthExpansion::point_difference) return right - left;
    if (order == 0) return kPi / l;

    const double lo = std::clamp(left, 0.0, kDomainLength);
    const double hi = std::clamp(right, 0.0, kDomainLength);
    const double first = (kPi + problem.potential().integral(lo, hi)) / l;
    if (order == 1) return first;

    const double m = problem.mass();
    const double l2 = 2.0 * l * l;
    const auto& b = problem.boundary();
    if (!b.is_classical()) {
        if (form == LengthExpansion::parity_form) {
            fail(ErrorKind::unsupported, "parity form applies to the classical problem only");
        }
        // l = (pi + int V)/lambda + m^2 l / (2 lambda^2), solved for l
        return first / (1.0 - m * m / l2);
    }
    const double s2a = std::sin(2.0 * b.alpha());
    if (form == LengthExpansion::parity_form) {
        if (component != 1) fail(ErrorKind::unsupported, "parity form is stated for component 1");
        const double sign = parity(j);
        return first + sign * (m * s2a + m * m * (right - left)) / l2;
    }
    const double sine_factor = component == 1 ? parity(j + 1) - parity(j) : parity(j + 2) - parity(j + 1);
    const double mass_factor = parity(j + 1) * right - parity(j) * left;
    return first + (sine_factor * m * s2a + mass_factor * m * m) / l2;
}

EigenfunctionCorrections classical_corrections(const DiracProblem& problem, double lambda, double x) {
    const double m = problem.mass();
    const double alpha = problem.boundary().alpha();
    const double p = lambda * x - problem.potential().cumulative(x);
    return {
        -m * std::sin(p) * std::cos(alpha) + 0.5 * m * m * x * std::cos(p + alpha),
        m * std::sin(p) * std::sin(alpha) + 0.5 * m * m * x * std::sin(p + alpha),
    };
}

double eigenfunction_asym(const DiracProblem& problem, double lambda, double x, int component,
                          double min_lambda) {
    if (component != 1 && component != 2) fail(ErrorKind::invalid_argument, "component must be 1 or 2");
    if (!(std::abs(lambda) >= min_lambda)) {
        fail(ErrorKind::invalid_argument, "eigenfunction asymptotics need |lambda| above the threshold");
    }
    const auto& b = problem.boundary();
    const double alpha = b.alpha();
    const double m = problem.mass();
    const double p = lambda * x - problem.potential().cumulative(x);
    if (b.is_classical()) {
        const auto corr = classical_corrections(problem, lambda, x);
        return component == 1 ? std::sin(p + alpha) - corr.correction_u / lambda
                              : -std::cos(p + alpha) - corr.correction_v / lambda;
    }
    const auto& d = b.param_dependent_data();
    const double half_m2x = 0.5 * m * m * x;
    if (component == 1) {
        return -lambda * std::sin(p + alpha) + half_m2x * std::cos(p + alpha) -
               m * std::cos(alpha) * std::sin(p) - d.a0 * std::sin(p) - d.b0 * std::cos(p);
    }
    // leading sign chosen so that x = 0 reproduces the initial spinor lambda cos(alpha) + a0
    return lambda * std::cos(p + alpha) + half_m2x * std::sin(p + alpha) + m * std::sin(alpha) * std::sin(p) +
           d.a0 * std::cos(p) - d.b0 * std::sin(p);
}

}  // namespace dirac_nodal
