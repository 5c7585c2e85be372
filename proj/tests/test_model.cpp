#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "dirac_nodal/error.hpp"
#include "dirac_nodal/model.hpp"

using namespace dirac_nodal;
constexpr double pi = std::numbers::pi;

namespace {
ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::config_error;
}
}  // namespace

TEST_CASE("parameter-dependent boundary enforces the sign conditions") {
    CHECK_NOTHROW(BoundaryForm::param_dependent(0.0, 0.0, 1.0, -1.0, 1.0, 1.0));
    CHECK(kind_of([] { BoundaryForm::param_dependent(0.0, 0.0, 1.0, 1.0, 1.0, 1.0); }) ==
          ErrorKind::boundary_condition);
    CHECK(kind_of([] { BoundaryForm::param_dependent(0.0, 0.0, 1.0, -1.0, 1.0, -1.0); }) ==
          ErrorKind::boundary_condition);
    // zero is not enough: the inequalities are strict
    CHECK_THROWS_AS(BoundaryForm::param_dependent(0.0, 0.0, 0.0, 0.0, 1.0, 1.0), Error);
    CHECK_THROWS_AS(BoundaryForm::param_dependent(2.0, 0.0, 1.0, -1.0, 1.0, 1.0), Error);
}

TEST_CASE("sign condition violations name the inequality") {
    try {
        BoundaryForm::param_dependent(0.0, 0.0, 1.0, 1.0, 1.0, 1.0);
        FAIL("expected failure");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("a0*sin(alpha) - b0*cos(alpha) > 0") != std::string::npos);
    }
}

TEST_CASE("sign condition sweep") {
    for (double a : {-1.5, -0.5, 0.0, 0.7, 1.5}) {
        for (double a0 : {-1.0, 0.0, 2.0}) {
            for (double b0 : {-1.0, 0.0, 1.5}) {
                const double q = a0 * std::sin(a) - b0 * std::cos(a);
                if (q <= 0.0) {
                    CHECK_THROWS_AS(BoundaryForm::param_dependent(a, 0.0, a0, b0, 0.0, 1.0), Error);
                } else {
                    CHECK_NOTHROW(BoundaryForm::param_dependent(a, 0.0, a0, b0, 0.0, 1.0));
                }
            }
        }
    }
}

TEST_CASE("classical boundary angle range") {
    CHECK_NOTHROW(BoundaryForm::classical(0.0, pi));
    CHECK_THROWS_AS(BoundaryForm::classical(-0.1, 0.0), Error);
    CHECK_THROWS_AS(BoundaryForm::classical(0.0, 3.5), Error);
    const auto b = BoundaryForm::classical(0.3, 0.4);
    CHECK(b.is_classical());
    CHECK(b.alpha() == 0.3);
    CHECK(b.beta() == 0.4);
    CHECK_THROWS_AS(b.param_dependent_data(), Error);
}

TEST_CASE("classical problems reject negative mass") {
    const auto v = Potential::named(library::Zero{});
    CHECK_THROWS_AS(DiracProblem(-0.5, v, BoundaryForm::classical(0, 0)), Error);
    CHECK_NOTHROW(DiracProblem(0.0, v, BoundaryForm::classical(0, 0)));
    CHECK_NOTHROW(DiracProblem(-0.5, v, BoundaryForm::param_dependent(0, 0, 1, -1, 1, 1)));
}

TEST_CASE("nodal set invariants") {
    const NodalSet s(5, 1, {0.5, 1.0, 2.0, 2.25});
    REQUIRE(s.lengths().size() == 3);
    double sum = 0.0;
    for (double l : s.lengths()) {
        CHECK(l > 0.0);
        sum += l;
    }
    CHECK(sum == s.points().back() - s.points().front());
    // points are recovered from the first point and the prefix sums of lengths
    double x = s.points()[0];
    for (std::size_t j = 0; j < s.lengths().size(); ++j) {
        x += s.lengths()[j];
        CHECK(x == s.points()[j + 1]);
    }
    CHECK_THROWS_AS(NodalSet(5, 1, {1.0, 0.5}), Error);
    CHECK_THROWS_AS(NodalSet(5, 1, {0.0, 0.5}), Error);
    CHECK_THROWS_AS(NodalSet(5, 1, {0.5, pi}), Error);
    CHECK_THROWS_AS(NodalSet(5, 3, {0.5}), Error);
    CHECK(NodalSet(5, 2, {}).empty());
}

TEST_CASE("grid sequence rows") {
    const GridSequence g(ProblemCase::classical, {{4, {0.5, 1.5, 2.5}}});
    CHECK(g.has_row(4));
    CHECK_FALSE(g.has_row(5));
    CHECK(g.lengths(4) == std::vector<double>{1.0, 1.0});
    CHECK_THROWS_AS(g.row(5), Error);
    try {
        (void)g.row(5);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::row_mismatch);
    }
    CHECK_THROWS_AS(GridSequence(ProblemCase::classical, {{4, {1.5, 0.5}}}), Error);
    CHECK(integer_lambda(ProblemCase::param_dependent, 10) == 8.0);
    CHECK(integer_lambda(ProblemCase::classical, 10) == 10.0);
}
