#include "pruefer.hpp"

#include <cmath>
#include <numbers>

namespace oracle {

Phase pruefer_phase(const dirac_nodal::DiracProblem& problem, double lambda, int steps) {
    const auto& b = problem.boundary();
    double y1 = 0.0;
    double y2 = 0.0;
    if (b.is_classical()) {
        y1 = std::sin(b.alpha());
        y2 = -std::cos(b.alpha());
    } else {
        const auto& p = b.param_dependent_data();
        y1 = -(lambda * std::sin(p.alpha) + p.b0);
        y2 = lambda * std::cos(p.alpha) + p.a0;
    }
    const double m = problem.mass();
    const auto& v = problem.potential();
    auto rhs = [&](double x, double phi) { return lambda - v(x) + m * std::cos(2.0 * phi); };
    Phase out;
    out.start = std::atan2(y1, -y2);
    double phi = out.start;
    const double h = std::numbers::pi / steps;
    for (int k = 0; k < steps; ++k) {
        const double x = k * h;
        const double x1 = std::min(x + h, std::numbers::pi);
        const double k1 = rhs(x, phi);
        const double k2 = rhs(x + 0.5 * h, phi + 0.5 * h * k1);
        const double k3 = rhs(x + 0.5 * h, phi + 0.5 * h * k2);
        const double k4 = rhs(x1, phi + h * k3);
        phi += h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
    }
    out.end = phi;
    return out;
}

int pruefer_node_count(const dirac_nodal::DiracProblem& problem, double lambda, int component, double margin,
                       int steps) {
    const auto ph = pruefer_phase(problem, lambda, steps);
    const double pi = std::numbers::pi;
    const double offset = component == 1 ? 0.0 : 0.5 * pi;
    double lo = std::min(ph.start, ph.end);
    double hi = std::max(ph.start, ph.end);
    lo += margin;
    hi -= margin;
    // number of offset + k pi strictly inside (lo, hi)
    const auto first = static_cast<long>(std::floor((lo - offset) / pi)) + 1;
    const auto last = static_cast<long>(std::ceil((hi - offset) / pi)) - 1;
    return last >= first ? static_cast<int>(last - first + 1) : 0;
}

}  // namespace oracle
