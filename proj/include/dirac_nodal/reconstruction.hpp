#pragma once

#include <optional>
#include <vector>

#include "dirac_nodal/model.hpp"

namespace dirac_nodal {

/// Piecewise-constant function on [0, pi]; values[k] holds on [breakpoints[k], breakpoints[k+1]).
class StepFunction {
public:
    StepFunction(std::vector<double> breakpoints, std::vector<double> values);

    [[nodiscard]] const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
    /// The last interval is closed on the right.
    [[nodiscard]] double operator()(double x) const;
    [[nodiscard]] double l1_norm() const;

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

enum class ReconstructionMode {
    paper_exact,  ///< the limit formulas with no normalisation
    corrected,    ///< normalised by 1/pi so the limit is V itself
};

enum class LambdaSource {
    integer_seed,  ///< n - 2 (case I) or n (case II)
    numeric,       ///< solver eigenvalue
    asymptotic,    ///< second-order eigenvalue expansion
};

/// Largest j with x_j <= x (1-based over the node list); 0 before the first node.
int jn_index(const NodalSet& nodes, double x);

/// lambda-hat for the chosen source; `numeric` must be supplied for LambdaSource::numeric.
double lambda_hat(const DiracProblem& problem, int n, LambdaSource source,
                  std::optional<double> numeric = std::nullopt);

/// Value of the approximant on the nodal interval [x_j, x_{j+1}] (j is 1-based).
///
/// paper_exact, case I:  lh (lh l - m^2 l / (2 lh) - pi)
/// paper_exact, case II: lh (lh l + s m^2 (x_j + x_{j+1}) / (2 lh) - pi) + s m sin 2a, s = (-1)^j
/// corrected: the case-I bracket divided by pi for both cases (the alternating
/// case-II terms do not vanish in the limit and are left out).
double reconstruction_value(const DiracProblem& problem, double lh, double left, double right, int j,
                            ReconstructionMode mode);

/// Step approximant on the nodal partition, extended constantly to [0, x_1) and
/// [x_last, pi]. Needs at least two nodes.
StepFunction reconstruct_step(const NodalSet& nodes, const DiracProblem& problem, double lh,
                              ReconstructionMode mode);

struct LocalAverage {
    double average = 0.0;                ///< lambda * int_I V
    double oscillatory = 0.0;            ///< lambda * int_I cos(2 lambda t) V
    double oscillatory_pi_kernel = 0.0;  ///< lambda * int_I cos(2 lambda pi t) V
};

/// Local quantities on the nodal interval containing x; the interval must be interior.
LocalAverage local_average_limit(const Potential& potential, const NodalSet& nodes, double lambda, double x);

/// (int V + beta - alpha) / pi
double mean_shift(const Potential& potential, const BoundaryForm& boundary);

/// int_0^pi |F - (V - shift)|; exact for piecewise-linear V, analytic V is
/// linearised on a grid of spacing pi/8192.
double l1_error(const StepFunction& f, const Potential& potential, double shift = 0.0);

/// int_0^pi |(A - shift_a) - (B - shift_b)|, same quadrature as l1_error.
double l1_distance(const Potential& a, const Potential& b, double shift_a = 0.0, double shift_b = 0.0);

}  // namespace dirac_nodal
