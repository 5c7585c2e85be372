#pragma once

#include <array>
#include <vector>

#include "dirac_nodal/model.hpp"

namespace dirac_nodal {

enum class Scheme {
    rk4,  ///< classical fourth-order Runge-Kutta
    rk8,  ///< eighth-order Dormand-Prince (DOP853) propagator, fixed step
};

struct IntegratorConfig {
    int steps = 4096;  ///< uniform steps over [0, pi]
    int stride = 4;    ///< retain every stride-th state for node detection
    Scheme scheme = Scheme::rk8;

    /// steps >= 64, stride >= 1 and stride divides steps.
    void validate() const;
};

/// Initial-value integrator for the Dirac system of one problem.
///
/// y1' = (V - m - lambda) y2,  y2' = (lambda - V - m) y1, started from the
/// lambda-dependent initial spinor of the boundary form. The potential is tabulated
/// once at every stage abscissa, so repeated shots at different lambda only cost
/// arithmetic. All member functions are const and safe to call concurrently.
class Shooter {
public:
    explicit Shooter(DiracProblem problem, IntegratorConfig config = {});

    [[nodiscard]] const DiracProblem& problem() const noexcept { return problem_; }
    [[nodiscard]] const IntegratorConfig& config() const noexcept { return config_; }
    [[nodiscard]] double step() const noexcept { return step_; }

    /// (-(lambda sin a + b0), lambda cos a + a0) for case I, (sin a, -cos a) for case II.
    [[nodiscard]] SpinorState initial_state(double lambda) const;

    /// States at x = k * stride * h, k = 0..steps/stride.
    [[nodiscard]] std::vector<SpinorState> integrate(double lambda) const;

    /// State at x = pi.
    [[nodiscard]] SpinorState terminal(double lambda) const;

    /// Continues the solution from `from` to position `to` with steps no longer than h.
    [[nodiscard]] SpinorState advance(double lambda, const SpinorState& from, double to) const;

    /// Right boundary form evaluated on the terminal state; zeros are the eigenvalues.
    [[nodiscard]] double characteristic(double lambda) const;

private:
    template <class Visit>
    void run(double lambda, Visit&& visit) const;

    DiracProblem problem_;
    IntegratorConfig config_;
    double step_;
    int stages_;
    std::vector<double> stage_potential_;  // steps * stages_
};

/// Trajectory of the initial-value problem (see Shooter::integrate).
std::vector<SpinorState> integrate(const DiracProblem& problem, double lambda,
                                   const IntegratorConfig& config = {});

double characteristic(const DiracProblem& problem, double lambda, const IntegratorConfig& config = {});

}  // namespace dirac_nodal
