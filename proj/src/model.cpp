#include "dirac_nodal/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dirac_nodal/error.hpp"

namespace dirac_nodal {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// angles read from decimal config files may overshoot pi/2 by an ulp or two
constexpr double kAngleSlack = 1e-14;

void require_finite(std::initializer_list<double> values, const char* what) {
    for (double v : values) {
        if (!std::isfinite(v)) fail(ErrorKind::boundary_condition, std::string(what) + " must be finite");
    }
}

}  // namespace

BoundaryForm BoundaryForm::param_dependent(double alpha, double beta, double a0, double b0, double a1,
                                           double b1) {
    require_finite({alpha, beta, a0, b0, a1, b1}, "boundary parameters");
    if (std::abs(alpha) > kHalfPi + kAngleSlack || std::abs(beta) > kHalfPi + kAngleSlack) {
        fail(ErrorKind::boundary_condition, "param_dependent boundary requires -pi/2 <= alpha, beta <= pi/2");
    }
    const double left = a0 * std::sin(alpha) - b0 * std::cos(alpha);
    if (!(left > 0.0)) {
        std::ostringstream os;
        os << "violated inequality a0*sin(alpha) - b0*cos(alpha) > 0 (value " << left << ")";
        fail(ErrorKind::boundary_condition, os.str());
    }
    const double right = a1 * std::sin(beta) - b1 * std::cos(beta);
    if (!(right < 0.0)) {
        std::ostringstream os;
        os << "violated inequality a1*sin(beta) - b1*cos(beta) < 0 (value " << right << ")";
        fail(ErrorKind::boundary_condition, os.str());
    }
    return BoundaryForm(ParamDependentBoundary{alpha, beta, a0, b0, a1, b1});
}

BoundaryForm BoundaryForm::classical(double alpha, double beta) {
    require_finite({alpha, beta}, "boundary angles");
    const double pi = std::numbers::pi;
    if (alpha < -kAngleSlack || alpha > pi + kAngleSlack || beta < -kAngleSlack || beta > pi + kAngleSlack) {
        fail(ErrorKind::boundary_condition, "classical boundary requires 0 <= alpha, beta <= pi");
    }
    return BoundaryForm(ClassicalBoundary{alpha, beta});
}

ProblemCase BoundaryForm::problem_case() const noexcept {
    return std::holds_alternative<ClassicalBoundary>(data_) ? ProblemCase::classical
                                                            : ProblemCase::param_dependent;
}

double BoundaryForm::alpha() const noexcept {
    return std::visit([](const auto& d) { return d.alpha; }, data_);
}

double BoundaryForm::beta() const noexcept {
    return std::visit([](const auto& d) { return d.beta; }, data_);
}

const ParamDependentBoundary& BoundaryForm::param_dependent_data() const {
    if (const auto* p = std::get_if<ParamDependentBoundary>(&data_)) return *p;
    fail(ErrorKind::unsupported, "classical boundary form has no eigenparameter coefficients");
}

double BoundaryForm::left_sign_quantity() const noexcept {
    if (const auto* p = std::get_if<ParamDependentBoundary>(&data_)) {
        return p->a0 * std::sin(p->alpha) - p->b0 * std::cos(p->alpha);
    }
    return 0.0;
}

double BoundaryForm::right_sign_quantity() const noexcept {
    if (const auto* p = std::get_if<ParamDependentBoundary>(&data_)) {
        return p->a1 * std::sin(p->beta) - p->b1 * std::cos(p->beta);
    }
    return 0.0;
}

DiracProblem::DiracProblem(double mass, Potential potential, BoundaryForm boundary)
    : mass_(mass), potential_(std::move(potential)), boundary_(boundary) {
    if (!std::isfinite(mass)) fail(ErrorKind::invalid_argument, "mass must be finite");
    if (boundary_.is_classical() && mass < 0.0) {
        fail(ErrorKind::invalid_argument, "classical problem requires a non-negative mass");
    }
}

DiracProblem DiracProblem::with_potential(Potential potential) const {
    return DiracProblem(mass_, std::move(potential), boundary_);
}

NodalSet::NodalSet(int index, int component, std::vector<double> points)
    : index_(index), component_(component), points_(std::move(points)) {
    if (component != 1 && component != 2) fail(ErrorKind::invalid_argument, "component must be 1 or 2");
    for (std::size_t j = 0; j < points_.size(); ++j) {
        const double x = points_[j];
        if (!(x > 0.0 && x < kDomainLength)) {
            fail(ErrorKind::invalid_argument, "nodal points must lie in (0, pi)");
        }
        if (j > 0 && !(x > points_[j - 1])) {
            fail(ErrorKind::invalid_argument, "nodal points must be strictly increasing");
        }
    }
    if (points_.size() > 1) {
        lengths_.reserve(points_.size() - 1);
        for (std::size_t j = 0; j + 1 < points_.size(); ++j) lengths_.push_back(points_[j + 1] - points_[j]);
    }
}

GridSequence::GridSequence(ProblemCase problem_case, std::map<int, std::vector<double>> rows)
    : case_(problem_case), rows_(std::move(rows)) {
    for (const auto& [n, row] : rows_) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (!(row[k] > 0.0 && row[k] < kDomainLength) || (k > 0 && !(row[k] > row[k - 1]))) {
                std::ostringstream os;
                os << "grid row " << n << " is not strictly increasing inside (0, pi)";
                fail(ErrorKind::invalid_argument, os.str());
            }
        }
    }
}

GridSequence GridSequence::from_nodal_sets(ProblemCase problem_case, std::span<const NodalSet> sets) {
    std::map<int, std::vector<double>> rows;
    for (const auto& set : sets) rows[set.index()] = {set.points().begin(), set.points().end()};
    return GridSequence(problem_case, std::move(rows));
}

std::span<const double> GridSequence::row(int n) const {
    auto it = rows_.find(n);
    if (it == rows_.end()) {
        fail(ErrorKind::row_mismatch, "grid sequence has no row for n = " + std::to_string(n));
    }
    return it->second;
}

std::vector<double> GridSequence::lengths(int n) const {
    auto r = row(n);
    std::vector<double> out;
    if (r.size() > 1) {
        out.reserve(r.size() - 1);
        for (std::size_t k = 0; k + 1 < r.size(); ++k) out.push_back(r[k + 1] - r[k]);
    }
    return out;
}

std::vector<int> GridSequence::indices() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& [n, row] : rows_) out.push_back(n);
    return out;
}

double integer_lambda(ProblemCase problem_case, int n) noexcept {
    return problem_case == ProblemCase::param_dependent ? double(n - 2) : double(n);
}

}  // namespace dirac_nodal
