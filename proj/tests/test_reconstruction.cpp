#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "dirac_nodal/eigen.hpp"
#include "dirac_nodal/error.hpp"
#include "dirac_nodal/fit.hpp"
#include "dirac_nodal/nodes.hpp"
#include "dirac_nodal/reconstruction.hpp"

using namespace dirac_nodal;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
constexpr double pi = std::numbers::pi;

namespace {
DiracProblem classical(double m, Potential v, double a = 0.0, double b = 0.0) {
    return DiracProblem(m, std::move(v), BoundaryForm::classical(a, b));
}
NodalSet uniform_nodes(int n) {
    std::vector<double> x;
    for (int j = 1; j < n; ++j) x.push_back(j * pi / n);
    return NodalSet(n, 1, x);
}
struct Solved {
    EigenRecord rec;
    NodalSet nodes;
};
Solved solve(const Shooter& s, int n) {
    auto rec = find_eigenvalue(s, n);
    return {rec, extract_nodes(s, rec, 1)};
}
}  // namespace

TEST_CASE("index function") {
    const NodalSet nodes(4, 1, {pi / 4, pi / 2, 3 * pi / 4});
    CHECK(jn_index(nodes, 0.6 * pi) == 2);
    CHECK(jn_index(nodes, pi / 2) == 2);
    CHECK(jn_index(nodes, 0.1) == 0);
    CHECK(jn_index(nodes, 3.0) == 3);
}

TEST_CASE("step function basics") {
    const StepFunction f({0.0, 1.0, 2.0, pi}, {1.0, -2.0, 0.5});
    CHECK(f(0.0) == 1.0);
    CHECK(f(1.0) == -2.0);
    CHECK(f(pi) == 0.5);
    CHECK_THAT(f.l1_norm(), WithinAbs(1.0 + 2.0 + 0.5 * (pi - 2.0), 1e-15));
    CHECK_THROWS_AS(StepFunction({0.0, 2.0, 1.0}, {1.0, 2.0}), Error);
    CHECK_THROWS_AS(StepFunction({0.0, 1.0, 2.0}, {1.0}), Error);
}

TEST_CASE("zero potential reconstructs to zero in both modes") {
    const auto p = classical(0.0, Potential::named(library::Zero{}));
    for (int n : {5, 12}) {
        for (auto mode : {ReconstructionMode::paper_exact, ReconstructionMode::corrected}) {
            const auto f = reconstruct_step(uniform_nodes(n), p, double(n), mode);
            for (double v : f.values()) CHECK_THAT(v, WithinAbs(0.0, 1e-12));
        }
    }
}

TEST_CASE("constant potential: the three normalisations") {
    const auto p = classical(0.0, Potential::named(library::Constant{1.0}));
    const int n = 10;
    const auto nodes = uniform_nodes(n);
    const double numeric = n + 1.0;
    const auto exact = reconstruct_step(nodes, p, numeric, ReconstructionMode::paper_exact);
    const auto corr = reconstruct_step(nodes, p, numeric, ReconstructionMode::corrected);
    const auto seed = reconstruct_step(nodes, p, lambda_hat(p, n, LambdaSource::integer_seed),
                                       ReconstructionMode::corrected);
    for (std::size_t k = 0; k < exact.values().size(); ++k) {
        CHECK_THAT(exact.values()[k], WithinAbs(pi * (n + 1.0) / n, 1e-11));
        CHECK_THAT(corr.values()[k], WithinAbs((n + 1.0) / n, 1e-12));
        CHECK_THAT(seed.values()[k], WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("lambda sources") {
    const auto p = DiracProblem(0.0, Potential::named(library::Zero{}), BoundaryForm::param_dependent(0, 0, 1, -1, 1, 1));
    CHECK(lambda_hat(p, 10, LambdaSource::integer_seed) == 8.0);
    CHECK(lambda_hat(p, 10, LambdaSource::numeric, 8.1) == 8.1);
    CHECK_THROWS_AS(lambda_hat(p, 10, LambdaSource::numeric), Error);
    CHECK_THAT(lambda_hat(p, 10, LambdaSource::asymptotic), WithinAbs(8.0 + 2.0 / (10 * pi), 1e-14));
}

TEST_CASE("paper-exact case II values carry the alternating terms") {
    const double m = 0.5;
    const double a = 0.3;
    const auto p = classical(m, Potential::named(library::Zero{}), a, 0.0);
    const double lh = 10.0;
    const double xl = 1.0;
    const double xr = 1.3;
    for (int j : {2, 3}) {
        const double s = j % 2 == 0 ? 1.0 : -1.0;
        const double expected = lh * (lh * 0.3 + s * m * m * (xl + xr) / (2 * lh) - pi) + s * m * std::sin(2 * a);
        CHECK_THAT(reconstruction_value(p, lh, xl, xr, j, ReconstructionMode::paper_exact), WithinRel(expected, 1e-13));
    }
    const double corrected = lh * (lh * 0.3 - m * m * 0.3 / (2 * lh) - pi) / pi;
    CHECK_THAT(reconstruction_value(p, lh, xl, xr, 3, ReconstructionMode::corrected), WithinRel(corrected, 1e-13));
}

TEST_CASE("reconstruction needs two nodes") {
    const auto p = classical(0.0, Potential::named(library::Zero{}));
    CHECK_THROWS_AS(reconstruct_step(NodalSet(2, 1, {pi / 2}), p, 2.0, ReconstructionMode::corrected), Error);
    CHECK_THROWS_AS(reconstruct_step(NodalSet(2, 1, {}), p, 2.0, ReconstructionMode::corrected), Error);
}

TEST_CASE("constant extension at both ends") {
    const auto p = classical(0.0, Potential::named(library::Zero{}));
    const auto f = reconstruct_step(NodalSet(5, 1, {0.5, 1.0, 2.0, 2.6}), p, 5.0, ReconstructionMode::corrected);
    REQUIRE(f.breakpoints().front() == 0.0);
    REQUIRE(f.breakpoints().back() == pi);
    CHECK(f(0.1) == f(0.7));
    CHECK(f(3.0) == f(2.3));
}

TEST_CASE("l1 error examples") {
    const auto one = Potential::named(library::Constant{1.0});
    const StepFunction zero_f({0.0, pi}, {0.0});
    CHECK_THAT(l1_error(zero_f, one), WithinAbs(pi, 1e-12));
    CHECK_THAT(l1_error(zero_f, one, mean_shift(one, BoundaryForm::classical(0, 0))), WithinAbs(0.0, 1e-12));
    const auto sampled = make_potential_sampled(std::vector<double>{2.0, 2.0, 2.0, 2.0});
    CHECK_THAT(l1_error(StepFunction({0.0, 1.0, pi}, {2.0, 2.0}), sampled), WithinAbs(0.0, 1e-14));
    // |x - 1| on [0, pi] against F = 0 is exact for a linear potential
    const auto lin = Potential::named(library::Poly{{-1.0, 1.0}});
    CHECK_THAT(l1_error(zero_f, lin), WithinAbs(0.5 + 0.5 * (pi - 1) * (pi - 1), 1e-12));
    CHECK_THAT(l1_distance(Potential::named(library::Sin2x{}), Potential::named(library::Zero{})),
               WithinAbs(2.0, 1e-6));
}

TEST_CASE("constant potentials are recovered with numeric lambda, shifted with the integer seed") {
    for (double c : {0.5, 2.0}) {
        const auto p = classical(0.0, Potential::named(library::Constant{c}));
        const Shooter s(p);
        for (int n : {12, 24}) {
            const auto sol = solve(s, n);
            const auto num = reconstruct_step(sol.nodes, p, sol.rec.lambda, ReconstructionMode::corrected);
            const auto seed = reconstruct_step(sol.nodes, p, n, ReconstructionMode::corrected);
            // nodes j pi / n and lambda = n + c give c (n + c) / n, an O(1/n) approach to c
            for (double v : num.values()) CHECK_THAT(v, WithinAbs(c * (n + c) / n, 1e-8));
            for (double v : seed.values()) CHECK_THAT(v, WithinAbs(0.0, 1e-8));
        }
    }
}

TEST_CASE("sin 2x approximants converge in L1 and pointwise") {
    const auto p = classical(0.5, Potential::named(library::Sin2x{}));
    const Shooter s(p);
    std::vector<double> l1;
    std::vector<double> at_third;
    std::vector<double> at_root;
    for (int n : {12, 24, 48}) {
        const auto sol = solve(s, n);
        const auto f = reconstruct_step(sol.nodes, p, sol.rec.lambda, ReconstructionMode::corrected);
        l1.push_back(l1_error(f, p.potential()));
        at_third.push_back(std::abs(f(pi / 3) - std::sin(2 * pi / 3)));
        const double x = pi * std::sqrt(2.0) / 2;
        at_root.push_back(std::abs(f(x) - std::sin(2 * x)));
    }
    CHECK(l1[2] < 0.5 * l1[0]);
    CHECK(l1[1] < l1[0]);
    CHECK(l1[2] < l1[1]);
    CHECK(at_third[1] < at_third[0]);
    CHECK(at_third[2] < at_third[1]);
    CHECK(at_root[1] < at_root[0]);
    CHECK(at_root[2] < at_root[1]);
}

TEST_CASE("local averages") {
    const auto nodes = uniform_nodes(20);
    const auto c = local_average_limit(Potential::named(library::Constant{1.5}), nodes, 20.0, 1.0);
    CHECK_THAT(c.average, WithinAbs(1.5 * pi, 1e-9));
    const auto z = local_average_limit(Potential::named(library::Zero{}), nodes, 20.0, 1.0);
    CHECK(z.average == 0.0);
    CHECK(z.oscillatory == 0.0);
    CHECK(z.oscillatory_pi_kernel == 0.0);
    CHECK_THROWS_AS(local_average_limit(Potential::named(library::Zero{}), nodes, 20.0, 0.05), Error);

    const auto p = classical(0.5, Potential::named(library::Sin2x{}));
    const Shooter s(p);
    const auto sol = solve(s, 40);
    const auto osc = local_average_limit(p.potential(), sol.nodes, sol.rec.lambda, 1.0);
    CHECK(std::abs(osc.oscillatory) < 0.1);
}

TEST_CASE("local average limit approaches V, oscillatory part decays") {
    const auto p = classical(0.5, Potential::named(library::Sin2x{}));
    const Shooter s(p);
    std::vector<double> ns;
    std::vector<double> err;
    std::vector<double> osc;
    for (int n : {12, 20, 30, 45, 60}) {
        const auto sol = solve(s, n);
        double e = 0.0;
        double o = 0.0;
        for (double x : {0.5, 1.0, 1.7, 2.4}) {
            const auto la = local_average_limit(p.potential(), sol.nodes, sol.rec.lambda, x);
            e = std::max(e, std::abs(la.average / pi - std::sin(2 * x)));
            o = std::max(o, std::abs(la.oscillatory));
        }
        ns.push_back(n);
        err.push_back(e);
        osc.push_back(o);
        CHECK(e * n < 4.0);
    }
    CHECK(log_log_slope(ns, err) < -0.7);
    CHECK(log_log_slope(ns, osc) < -0.7);
}
