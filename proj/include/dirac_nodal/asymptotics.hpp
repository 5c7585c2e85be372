#pragma once

#include <optional>
#include <vector>

#include "dirac_nodal/model.hpp"

namespace dirac_nodal {

/// Constants of the eigenvalue asymptotics.
///
/// v  = integral of V over [0, pi] + beta - alpha (both cases)
/// c  = m^2/2 + m (sin 2a - sin 2b)/(2 pi) + (a0 sin a - b0 cos a)/pi - (a1 sin b - b1 cos b)/pi
/// c1 = (m (sin 2a - sin 2b) + m^2 pi) / (2 pi cos^2(int V - a + b)), classical case only;
///      absent when the cosine vanishes.
struct AsymptoticConstants {
    double v = 0.0;
    double c = 0.0;
    std::optional<double> c1;
};

AsymptoticConstants asymptotic_constants(const DiracProblem& problem);

/// Partial sum of the eigenvalue expansion for index n != 0.
///   case I,  n > 0: n - 2 + v/pi + c/n;   case I, n < 0: n + v/pi + c/n
///   case II:        n + v/pi + c1/n
/// order 0 keeps the integer term, 1 adds v/pi, 2 adds the 1/n term.
/// Throws ConstantsUnavailable when order 2 needs a singular c1.
double lambda_asym(const DiracProblem& problem, int n, int order = 2);

/// 1/s - v/(s^2 pi) + (v^2 - pi^2 c)/(s^3 pi^2): three-term expansion of 1/lambda
/// around the integer term s.
double lambda_inverse_series(double v, double c, double s);

/// Reciprocal eigenvalue expansion; s = n - 2 and c for case I, s = n and c1 for case II.
double lambda_inverse_asym(const DiracProblem& problem, int n);

struct AsymptoticNode {
    int label = 0;  ///< j in the expansion (phase j*pi or (j - 1/2)*pi)
    double x = 0.0;
};

/// Asymptotic position of the nodal point with label j of component 1 or 2.
///
/// The implicit occurrences of x on the right-hand side (through the integral of V
/// and the m^2 x term) are resolved by fixed-point iteration from j*pi/lambda.
/// `lambda` defaults to lambda_asym(problem, n, 2). Component 2 is only available
/// for classical problems.
double nodal_point_asym(const DiracProblem& problem, int n, int j, int component, int order = 2,
                        std::optional<double> lambda = std::nullopt);

/// Case-I component-1 nodal point from the expansion in powers of 1/(n - 2)
/// (reciprocal eigenvalue series substituted), also resolved by fixed point.
double nodal_point_asym_expanded(const DiracProblem& problem, int n, int j);

/// All labels whose asymptotic nodal point lies in (0, pi), in increasing order.
std::vector<AsymptoticNode> nodal_points_asym(const DiracProblem& problem, int n, int component,
                                              int order = 2, std::optional<double> lambda = std::nullopt);

enum class LengthExpansion {
    direct,            ///< expansion with the (-1)^j factors of both endpoints kept apart
    parity_form,       ///< printed "j = 2k (or 2k+1)" form: + branch for even j
    point_difference,  ///< difference of consecutive nodal_point_asym values
};

/// Asymptotic nodal length between labels j and j+1.
double nodal_length_asym(const DiracProblem& problem, int n, int j, int component, int order = 2,
                         std::optional<double> lambda = std::nullopt,
                         LengthExpansion form = LengthExpansion::direct);

/// First-order correction terms of the classical eigenfunction, stored under names
/// that do not clash with the potential: u1 ~ sin(...) - correction_u/lambda,
/// u2 ~ -cos(...) - correction_v/lambda.
struct EigenfunctionCorrections {
    double correction_u = 0.0;
    double correction_v = 0.0;
};

EigenfunctionCorrections classical_corrections(const DiracProblem& problem, double lambda, double x);

/// Leading asymptotic form of component 1 or 2 of the initial-value solution.
/// Requires |lambda| >= min_lambda.
double eigenfunction_asym(const DiracProblem& problem, double lambda, double x, int component,
                          double min_lambda = 5.0);

}  // namespace dirac_nodal
