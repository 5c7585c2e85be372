#pragma once

#include <map>
#include <span>
#include <variant>
#include <vector>

#include "dirac_nodal/potential.hpp"

namespace dirac_nodal {

/// (lambda cos a + a0) y1(0) + (lambda sin a + b0) y2(0) = 0 and the analogous
/// condition at pi with (beta, a1, b1).
struct ParamDependentBoundary {
    double alpha = 0.0;
    double beta = 0.0;
    double a0 = 0.0;
    double b0 = 0.0;
    double a1 = 0.0;
    double b1 = 0.0;
};

/// y1(0) cos a + y2(0) sin a = 0, y1(pi) cos b + y2(pi) sin b = 0.
struct ClassicalBoundary {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Case I: eigenparameter-dependent boundary conditions. Case II: classical ones.
enum class ProblemCase { param_dependent, classical };

class BoundaryForm {
public:
    /// Requires |alpha|, |beta| <= pi/2, a0 sin(alpha) - b0 cos(alpha) > 0 and
    /// a1 sin(beta) - b1 cos(beta) < 0.
    static BoundaryForm param_dependent(double alpha, double beta, double a0, double b0, double a1,
                                        double b1);
    /// Requires 0 <= alpha, beta <= pi.
    static BoundaryForm classical(double alpha, double beta);

    [[nodiscard]] ProblemCase problem_case() const noexcept;
    [[nodiscard]] bool is_classical() const noexcept { return problem_case() == ProblemCase::classical; }
    [[nodiscard]] double alpha() const noexcept;
    [[nodiscard]] double beta() const noexcept;
    /// Parameters of a case-I form; throws for classical forms.
    [[nodiscard]] const ParamDependentBoundary& param_dependent_data() const;

    /// a0 sin(alpha) - b0 cos(alpha) (zero for classical forms).
    [[nodiscard]] double left_sign_quantity() const noexcept;
    /// a1 sin(beta) - b1 cos(beta) (zero for classical forms).
    [[nodiscard]] double right_sign_quantity() const noexcept;

private:
    explicit BoundaryForm(std::variant<ParamDependentBoundary, ClassicalBoundary> data)
        : data_(data) {}
    std::variant<ParamDependentBoundary, ClassicalBoundary> data_;
};

/// B y' + diag(V + m, V - m) y = lambda y on [0, pi] with boundary conditions.
class DiracProblem {
public:
    /// Classical forms reject negative mass.
    DiracProblem(double mass, Potential potential, BoundaryForm boundary);

    [[nodiscard]] double mass() const noexcept { return mass_; }
    [[nodiscard]] const Potential& potential() const noexcept { return potential_; }
    [[nodiscard]] const BoundaryForm& boundary() const noexcept { return boundary_; }
    [[nodiscard]] ProblemCase problem_case() const noexcept { return boundary_.problem_case(); }

    /// Same mass and boundary data with a different potential.
    [[nodiscard]] DiracProblem with_potential(Potential potential) const;

private:
    double mass_;
    Potential potential_;
    BoundaryForm boundary_;
};

struct SpinorState {
    double x = 0.0;
    double y1 = 0.0;
    double y2 = 0.0;
};

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

struct EigenRecord {
    int index = 0;
    double lambda = 0.0;
    /// Characteristic function at lambda.
    double residual = 0.0;
    /// Final sign-change bracket of the root finder.
    Bracket bracket;
    /// Secant slope of the characteristic function across the bracket.
    double slope = 0.0;
};

/// Ordered interior zeros of eigenfunction component 1 or 2.
class NodalSet {
public:
    NodalSet(int index, int component, std::vector<double> points);

    [[nodiscard]] int index() const noexcept { return index_; }
    [[nodiscard]] int component() const noexcept { return component_; }
    [[nodiscard]] std::span<const double> points() const noexcept { return points_; }
    [[nodiscard]] std::span<const double> lengths() const noexcept { return lengths_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] bool empty() const noexcept { return points_.empty(); }

private:
    int index_;
    int component_;
    std::vector<double> points_;
    std::vector<double> lengths_;
};

/// Admissible double sequence {X_k^n}: one strictly increasing row in (0, pi) per n.
class GridSequence {
public:
    GridSequence(ProblemCase problem_case, std::map<int, std::vector<double>> rows);

    static GridSequence from_nodal_sets(ProblemCase problem_case, std::span<const NodalSet> sets);

    [[nodiscard]] ProblemCase problem_case() const noexcept { return case_; }
    [[nodiscard]] bool has_row(int n) const noexcept { return rows_.contains(n); }
    [[nodiscard]] std::span<const double> row(int n) const;
    /// Grid lengths L_k^n = X_{k+1}^n - X_k^n.
    [[nodiscard]] std::vector<double> lengths(int n) const;
    [[nodiscard]] std::vector<int> indices() const;
    [[nodiscard]] const std::map<int, std::vector<double>>& rows() const noexcept { return rows_; }

private:
    ProblemCase case_;
    std::map<int, std::vector<double>> rows_;
};

/// lambda-hat used for grid asymptotics: n - 2 for case I, n for case II.
[[nodiscard]] double integer_lambda(ProblemCase problem_case, int n) noexcept;

}  // namespace dirac_nodal
