#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "dirac_nodal/error.hpp"
#include "dirac_nodal/integrator.hpp"

using namespace dirac_nodal;
using Catch::Matchers::WithinAbs;
constexpr double pi = std::numbers::pi;

namespace {
DiracProblem classical(double m, Potential v, double a, double b) {
    return DiracProblem(m, std::move(v), BoundaryForm::classical(a, b));
}
}  // namespace

TEST_CASE("zero potential trajectory is sin 3x, -cos 3x") {
    const auto p = classical(0.0, Potential::named(library::Zero{}), 0.0, 0.0);
    for (auto scheme : {Scheme::rk4, Scheme::rk8}) {
        IntegratorConfig cfg;
        cfg.scheme = scheme;
        const auto traj = integrate(p, 3.0, cfg);
        REQUIRE(traj.size() == std::size_t(cfg.steps / cfg.stride) + 1);
        CHECK(traj.front().x == 0.0);
        CHECK(traj.back().x == pi);
        for (const auto& s : traj) {
            CHECK_THAT(s.y1, WithinAbs(std::sin(3 * s.x), 1e-8));
            CHECK_THAT(s.y2, WithinAbs(-std::cos(3 * s.x), 1e-8));
        }
    }
}

TEST_CASE("initial spinors") {
    const auto zero = Potential::named(library::Zero{});
    const Shooter c(classical(0.0, zero, pi / 2, 0.0));
    const auto s = c.initial_state(7.0);
    CHECK(s.y1 == 1.0);
    CHECK(std::abs(s.y2) < 1e-16);
    const Shooter d(DiracProblem(0.0, zero, BoundaryForm::param_dependent(0.0, 0.0, 1.0, -1.0, 1.0, 1.0)));
    const double lambda = 2.5;
    const auto t = d.initial_state(lambda);
    CHECK(t.y1 == 1.0);
    CHECK(t.y2 == lambda + 1.0);
    CHECK(d.integrate(lambda).front().y2 == lambda + 1.0);
}

TEST_CASE("case I initial spinor never vanishes") {
    // both entries zero would force a0 sin(alpha) - b0 cos(alpha) = 0
    const auto zero = Potential::named(library::Zero{});
    for (double a : {-1.2, 0.0, 0.4, pi / 2}) {
        const double a0 = std::sin(a);  // a0 sin a - b0 cos a = sin^2 a + cos(a)/2 > 0
        const double b0 = -0.5;
        const Shooter s(DiracProblem(0.0, zero, BoundaryForm::param_dependent(a, 0.0, a0, b0, 0.0, 1.0)));
        for (double lambda = -20.0; lambda <= 20.0; lambda += 0.25) {
            const auto st = s.initial_state(lambda);
            CHECK(std::hypot(st.y1, st.y2) > 1e-3);
        }
    }
}

TEST_CASE("characteristic function closed forms") {
    const auto p = classical(0.0, Potential::named(library::Zero{}), 0.0, 0.0);
    for (int n = 1; n <= 10; ++n) {
        CHECK_THAT(characteristic(p, double(n)), WithinAbs(0.0, 1e-8));
        CHECK_THAT(std::abs(characteristic(p, n + 0.5)), WithinAbs(1.0, 1e-8));
    }
}

TEST_CASE("overflow is reported as an integration failure") {
    // lambda = 0 with a huge mass is hyperbolic; (1, -1) is the growing direction, exp(m pi)
    const auto p = DiracProblem(300.0, Potential::named(library::Zero{}),
                                BoundaryForm::param_dependent(0.0, 0.0, -1.0, -1.0, 1.0, 1.0));
    try {
        (void)integrate(p, 0.0);
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::integration_failure);
    }
}

TEST_CASE("integrator config validation") {
    IntegratorConfig c;
    c.steps = 32;
    CHECK_THROWS_AS(c.validate(), Error);
    c.steps = 100;
    c.stride = 3;
    CHECK_THROWS_AS(c.validate(), Error);
    c.stride = 4;
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("advance matches the retained trajectory") {
    const auto p = classical(0.5, Potential::named(library::Sin2x{}), 0.3, 0.2);
    const Shooter s(p);
    const auto traj = s.integrate(12.3);
    const auto mid = s.advance(12.3, traj[10], traj[20].x);
    CHECK_THAT(mid.y1, WithinAbs(traj[20].y1, 1e-11));
    CHECK_THAT(mid.y2, WithinAbs(traj[20].y2, 1e-11));
}

TEST_CASE("eighth-order scheme converges faster than rk4") {
    const auto p = classical(0.0, Potential::named(library::Zero{}), 0.0, 0.0);
    IntegratorConfig r4;
    r4.scheme = Scheme::rk4;
    IntegratorConfig r8;
    const double e4 = std::abs(integrate(p, 40.0, r4).back().y2 + std::cos(40.0 * pi));
    const double e8 = std::abs(integrate(p, 40.0, r8).back().y2 + std::cos(40.0 * pi));
    CHECK(e8 < e4);
    CHECK(e8 < 1e-11);
}
