#include "dirac_nodal/nodes.hpp"

#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <sstream>

#include "dirac_nodal/error.hpp"

namespace dirac_nodal {

namespace {

constexpr double kZeroRatio = 1e-13;
constexpr int kRefineIterations = 200;

double pick(const SpinorState& s, int component) { return component == 1 ? s.y1 : s.y2; }

int classify(const SpinorState& s, int component) {
    const double v = pick(s, component);
    const double scale = std::max(std::abs(s.y1), std::abs(s.y2));
    if (std::abs(v) <= kZeroRatio * scale) return 0;
    return v > 0.0 ? 1 : -1;
}

}  // namespace

NodalSet extract_nodes(const Shooter& shooter, const EigenRecord& rec, int component, const NodeConfig& config) {
    if (component != 1 && component != 2) fail(ErrorKind::invalid_argument, "component must be 1 or 2");
    const double lambda = rec.lambda;
    const auto traj = shooter.integrate(lambda);
    const std::size_t count = traj.size();

    std::vector<int> signs(count);
    for (std::size_t k = 0; k < count; ++k) signs[k] = classify(traj[k], component);

    const auto interior = [&config](double x) {
        return x > config.endpoint_margin && x < kDomainLength - config.endpoint_margin;
    };

    std::vector<double> points;
    for (std::size_t k = 0; k + 1 < count; ++k) {
        if (signs[k] == 0 && signs[k + 1] == 0) {
            std::ostringstream os;
            os << "component " << component << " vanishes on [" << traj[k].x << ", " << traj[k + 1].x
               << "] for lambda = " << lambda;
            fail(ErrorKind::degenerate_component, os.str());
        }
        if (signs[k] == 0) {
            if (k > 0 && interior(traj[k].x)) points.push_back(traj[k].x);
            continue;
        }
        if (signs[k] * signs[k + 1] >= 0) continue;

        const SpinorState& from = traj[k];
        const auto f = [&](double x) { return pick(shooter.advance(lambda, from, x), component); };
        std::uintmax_t iters = kRefineIterations;
        const double tol = config.position_tolerance;
        const auto stop = [tol](double a, double b) { return std::abs(b - a) <= tol; };
        const auto r = boost::math::tools::toms748_solve(f, from.x, traj[k + 1].x, pick(from, component),
                                                         pick(traj[k + 1], component), stop, iters);
        const double x = 0.5 * (r.first + r.second);
        if (interior(x)) points.push_back(x);
    }
    return NodalSet(rec.index, component, std::move(points));
}

int node_count_prediction(const BoundaryForm& boundary, int n, int component) {
    if (n < 4) fail(ErrorKind::invalid_argument, "node count prediction needs n >= 4");
    if (component != 1 && component != 2) fail(ErrorKind::invalid_argument, "component must be 1 or 2");
    if (boundary.is_classical()) return std::abs(n) + 1 - component;
    if (component == 2) fail(ErrorKind::unsupported, "no node count is known for component 2 of case I");
    const bool a = boundary.alpha() >= 0.0;
    const bool b = boundary.beta() > 0.0;
    if (a == b) return n - 2;
    return a ? n - 3 : n - 1;
}

NodeCountCheck check_node_count(const BoundaryForm& boundary, const NodalSet& nodes) {
    NodeCountCheck c;
    c.observed = static_cast<int>(nodes.size());
    c.predicted = node_count_prediction(boundary, nodes.index(), nodes.component());
    c.matches = c.observed == c.predicted;
    return c;
}

}  // namespace dirac_nodal
