#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "dirac_nodal/asymptotics.hpp"
#include "dirac_nodal/eigen.hpp"
#include "dirac_nodal/error.hpp"
#include "dirac_nodal/fit.hpp"
#include "dirac_nodal/nodes.hpp"

using namespace dirac_nodal;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
constexpr double pi = std::numbers::pi;

namespace {
DiracProblem classical(double m, Potential v, double a, double b) {
    return DiracProblem(m, std::move(v), BoundaryForm::classical(a, b));
}
DiracProblem pd_example() {
    return DiracProblem(0.5, Potential::named(library::Sin2x{}),
                        BoundaryForm::param_dependent(0.5, 0.5, 0.0, -0.5, 0.0, 0.5));
}
const Potential zero = Potential::named(library::Zero{});
}  // namespace

TEST_CASE("constants") {
    const auto k = asymptotic_constants(classical(0, zero, 0.2, 0.9));
    CHECK_THAT(k.v, WithinAbs(0.7, 1e-15));
    REQUIRE(k.c1.has_value());
    CHECK(*k.c1 == 0.0);
    const auto sing = asymptotic_constants(classical(0, zero, pi / 2, 0.0));
    CHECK_FALSE(sing.c1.has_value());
    const auto p = asymptotic_constants(pd_example());
    CHECK_THAT(p.v, WithinAbs(0.0, 1e-12));
}

TEST_CASE("eigenvalue expansion examples") {
    CHECK_THAT(lambda_asym(classical(0, zero, 0, 0), 7, 2), WithinAbs(7.0, 1e-15));
    CHECK_THAT(lambda_asym(classical(0, zero, 0, pi / 4), 7, 2), WithinAbs(7.25, 1e-15));
    const DiracProblem p(0.0, zero, BoundaryForm::param_dependent(0, 0, 1, -1, 1, 1));
    CHECK_THAT(lambda_asym(p, 10, 2), WithinAbs(8.0 + 2.0 / (10.0 * pi), 1e-14));
    CHECK(lambda_asym(p, 10, 0) == 8.0);
    CHECK_THAT(lambda_asym(p, -10, 2), WithinAbs(-10.0 - 2.0 / (10.0 * pi), 1e-14));
    CHECK_THROWS_AS(lambda_asym(p, 0, 2), Error);
}

TEST_CASE("singular c1 only blocks the second order") {
    const auto p = classical(0, zero, pi / 2, 0.0);
    CHECK_THAT(lambda_asym(p, 5, 1), WithinAbs(4.5, 1e-15));
    try {
        (void)lambda_asym(p, 5, 2);
        FAIL("expected ConstantsUnavailable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::constants_unavailable);
    }
}

TEST_CASE("reciprocal series") {
    CHECK_THAT(lambda_inverse_series(0.0, 0.0, 10.0), WithinAbs(0.1, 1e-16));
    CHECK_THAT(lambda_inverse_series(pi, 0.0, 10.0), WithinAbs(0.1 - 0.01 + 0.001, 1e-16));
    const auto p = pd_example();
    CHECK_THROWS_AS(lambda_inverse_asym(p, 3), Error);
    double prev = INFINITY;
    for (int n : {10, 20, 40, 80}) {
        const double defect = std::abs(lambda_inverse_asym(p, n) * lambda_asym(p, n, 2) - 1.0);
        const double scaled = defect * std::pow(n - 2.0, 3);
        CHECK(scaled < 1.0);
        CHECK(defect < prev);
        prev = defect;
    }
}

TEST_CASE("nodal point examples") {
    CHECK_THAT(nodal_point_asym(classical(0, zero, 0, 0), 5, 2, 1), WithinAbs(2 * pi / 5, 1e-12));
    CHECK_THAT(nodal_point_asym(classical(0, zero, 0, 0), 5, 2, 2), WithinAbs(1.5 * pi / 5, 1e-12));
    const auto c = Potential::named(library::Constant{0.8});
    CHECK_THAT(nodal_point_asym(classical(0, c, 0, 0), 5, 2, 1), WithinAbs(2 * pi / 5, 1e-12));
    CHECK_THROWS_AS(nodal_point_asym(pd_example(), 10, 2, 2), Error);
}

TEST_CASE("expanded and fixed-point nodal forms agree to third order") {
    const auto p = pd_example();
    double prev = INFINITY;
    for (int n : {10, 20, 40}) {
        double worst = 0.0;
        for (const auto& node : nodal_points_asym(p, n, 1)) {
            if (node.label < 1) continue;
            const double lam = lambda_asym(p, n, 2);
            if (node.x > pi - 2.0 / lam) continue;
            worst = std::max(worst, std::abs(nodal_point_asym_expanded(p, n, node.label) - node.x));
        }
        CHECK(worst < prev);
        prev = worst;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("zero potential lengths") {
    for (int n : {5, 9, 30}) {
        for (auto form : {LengthExpansion::direct, LengthExpansion::point_difference, LengthExpansion::parity_form}) {
            CHECK_THAT(nodal_length_asym(classical(0, zero, 0, 0), n, 2, 1, 2, std::nullopt, form),
                       WithinAbs(pi / n, 1e-12));
        }
    }
}

TEST_CASE("parity form alternates the mass terms") {
    const double m = 0.5;
    const auto p = classical(m, zero, pi / 8, 0.0);
    const int n = 20;
    const double lam = lambda_asym(p, n, 2);
    for (int j = 2; j <= 10; j += 2) {
        const double even = nodal_length_asym(p, n, j, 1, 2, std::nullopt, LengthExpansion::parity_form) - pi / lam;
        const double odd =
            nodal_length_asym(p, n, j + 1, 1, 2, std::nullopt, LengthExpansion::parity_form) - pi / lam;
        CHECK(even > 0.0);
        CHECK(odd < 0.0);
        const double l = nodal_point_asym(p, n, j + 1, 1, 2, lam) - nodal_point_asym(p, n, j, 1, 2, lam);
        CHECK_THAT(even, WithinRel((m * std::sin(pi / 4) + m * m * l) / (2 * lam * lam), 1e-12));
    }
}

TEST_CASE("direct lengths match point differences to third order") {
    for (const auto& p : {pd_example(), classical(0.5, Potential::named(library::Sin2x{}), 0.3, 1.0)}) {
        // the two forms coincide up to the fixed-point tolerance, well inside C/n^3
        for (int n : {10, 20, 40, 80}) {
            double worst = 0.0;
            const auto nodes = nodal_points_asym(p, n, 1);
            for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
                const int j = nodes[k].label;
                worst = std::max(worst, std::abs(nodal_length_asym(p, n, j, 1) -
                                                 nodal_length_asym(p, n, j, 1, 2, std::nullopt,
                                                                   LengthExpansion::point_difference)));
            }
            CHECK(worst * n * n * n < 20.0);
        }
    }
}

TEST_CASE("eigenfunction expansion examples") {
    CHECK(eigenfunction_asym(classical(0, zero, 0, 0), 7.3, 1.1, 1) == std::sin(7.3 * 1.1));
    const auto p = classical(1.0, zero, 0, 0);
    const double u = -std::sin(5 * pi) + 0.5 * (pi / 2) * std::cos(5 * pi);
    CHECK_THAT(eigenfunction_asym(p, 10.0, pi / 2, 1), WithinAbs(std::sin(5 * pi) - u / 10.0, 1e-12));
    CHECK_THROWS_AS(eigenfunction_asym(p, 2.0, 1.0, 1), Error);
}

TEST_CASE("eigenfunction expansion tracks the solver") {
    // classical: error of the corrected form is O(1/lambda^2) against O(1) amplitude
    const auto c = classical(0.5, Potential::named(library::Sin2x{}), 0.3, 0.0);
    std::vector<double> lams;
    std::vector<double> errs;
    for (double lam : {10.0, 20.0, 40.0}) {
        double worst = 0.0;
        for (const auto& st : integrate(c, lam)) {
            worst = std::max({worst, std::abs(st.y1 - eigenfunction_asym(c, lam, st.x, 1)),
                              std::abs(st.y2 - eigenfunction_asym(c, lam, st.x, 2))});
        }
        lams.push_back(lam);
        errs.push_back(worst);
    }
    CHECK(log_log_slope(lams, errs) < -1.5);

    // case I: O(1) absolute error against O(lambda) amplitude
    const auto p = pd_example();
    for (double lam : {10.0, 20.0, 40.0}) {
        double worst = 0.0;
        double amp = 0.0;
        for (const auto& st : integrate(p, lam)) {
            worst = std::max({worst, std::abs(st.y1 - eigenfunction_asym(p, lam, st.x, 1)),
                              std::abs(st.y2 - eigenfunction_asym(p, lam, st.x, 2))});
            amp = std::max(amp, std::hypot(st.y1, st.y2));
        }
        CHECK(worst < 3.0);
        CHECK(worst / amp < 3.0 / lam);
    }
}

TEST_CASE("second-order expansions converge at rate two") {
    for (const auto& p : {classical(0.5, Potential::named(library::Sin2x{}), 0.0, 0.0), pd_example()}) {
        const Shooter s(p);
        std::vector<double> ns;
        std::vector<double> el;
        std::vector<double> ex;
        for (int n = 10; n <= 30; n += 4) {
            const auto rec = find_eigenvalue(s, n);
            el.push_back(std::abs(rec.lambda - lambda_asym(p, n, 2)));
            const auto nodes = extract_nodes(s, rec, 1);
            const auto asym = nodal_points_asym(p, n, 1, 2, rec.lambda);
            double worst = 0.0;
            for (double x : nodes.points()) {
                double best = INFINITY;
                for (const auto& a : asym) best = std::min(best, std::abs(a.x - x));
                worst = std::max(worst, best);
            }
            ex.push_back(worst);
            ns.push_back(n);
        }
        CHECK(log_log_slope(ns, el) <= -1.5);
        CHECK(log_log_slope(ns, ex) <= -1.5);
    }
}
