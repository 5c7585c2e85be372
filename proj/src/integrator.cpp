#include "dirac_nodal/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dirac_nodal/error.hpp"

namespace dirac_nodal {

namespace {

template <int S>
struct Tableau {
    std::array<double, S> c;
    std::array<std::array<double, S>, S> a;
    std::array<double, S> b;
};

constexpr Tableau<4> kRk4{
    {0.0, 0.5, 0.5, 1.0},
    {{{0, 0, 0, 0}, {0.5, 0, 0, 0}, {0, 0.5, 0, 0}, {0, 0, 1.0, 0}}},
    {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0},
};

// Dormand & Prince eighth-order propagator (Hairer, Norsett & Wanner, DOP853).
constexpr Tableau<12> kRk8{
    {0.0, 0.526001519587677318785587544488e-01, 0.789002279381515978178381316732e-01,
     0.118350341907227396726757197510e+00, 0.281649658092772603273242802490e+00,
     0.333333333333333333333333333333e+00, 0.25e+00, 0.307692307692307692307692307692e+00,
     0.651282051282051282051282051282e+00, 0.6e+00, 0.857142857142857142857142857142e+00, 1.0},
    {{
        {},
        {5.26001519587677318785587544488e-2},
        {1.97250569845378994544595329183e-2, 5.91751709536136983633785987549e-2},
        {2.95875854768068491816892993775e-2, 0.0, 8.87627564304205475450678981324e-2},
        {2.41365134159266685502369798665e-1, 0.0, -8.84549479328286085344864962717e-1,
         9.24834003261792003115737966543e-1},
        {3.7037037037037037037037037037e-2, 0.0, 0.0, 1.70828608729473871279604482173e-1,
         1.25467687566822425016691814123e-1},
        {3.7109375e-2, 0.0, 0.0, 1.70252211019544039314978060272e-1, 6.02165389804559606850219397283e-2,
         -1.7578125e-2},
        {3.70920001185047927108779319836e-2, 0.0, 0.0, 1.70383925712239993810214054705e-1,
         1.07262030446373284651809199168e-1, -1.53194377486244017527936158236e-2,
         8.27378916381402288758473766002e-3},
        {6.24110958716075717114429577812e-1, 0.0, 0.0, -3.36089262944694129406857109825e0,
         -8.68219346841726006818189891453e-1, 2.75920996994467083049415600797e1,
         2.01540675504778934086186788979e1, -4.34898841810699588477366255144e1},
        {4.77662536438264365890433908527e-1, 0.0, 0.0, -2.48811461997166764192642586468e0,
         -5.90290826836842996371446475743e-1, 2.12300514481811942347288949897e1,
         1.52792336328824235832596922938e1, -3.32882109689848629194453265587e1,
         -2.03312017085086261358222928593e-2},
        {-9.3714243008598732571704021658e-1, 0.0, 0.0, 5.18637242884406370830023853209e0,
         1.09143734899672957818500254654e0, -8.14978701074692612513997267357e0,
         -1.85200656599969598641566180701e1, 2.27394870993505042818970056734e1,
         2.49360555267965238987089396762e0, -3.0467644718982195003823669022e0},
        {2.27331014751653820792359768449e0, 0.0, 0.0, -1.05344954667372501984066689879e1,
         -2.00087205822486249909675718444e0, -1.79589318631187989172765950534e1,
         2.79488845294199600508499808837e1, -2.85899827713502369474065508674e0,
         -8.87285693353062954433549289258e0, 1.23605671757943030647266201528e1,
         6.43392746015763530355970484046e-1},
    }},
    {5.42937341165687622380535766363e-2, 0.0, 0.0, 0.0, 0.0, 4.45031289275240888144113950566e0,
     1.89151789931450038304281599044e0, -5.8012039600105847814672114227e0,
     3.1116436695781989440891606237e-1, -1.52160949662516078556178806805e-1,
     2.01365400804030348374776537501e-1, 4.47106157277725905176885569043e-2},
};

// One explicit Runge-Kutta step of the linear Dirac system; `potential(i)` is V at stage i.
template <int S, class StagePotential>
inline void rk_step(const Tableau<S>& t, double lambda, double mass, double h, double& y1, double& y2,
                    StagePotential&& potential) {
    std::array<double, S> k1{};
    std::array<double, S> k2{};
    for (int i = 0; i < S; ++i) {
        double s1 = y1;
        double s2 = y2;
        for (int j = 0; j < i; ++j) {
            const double aij = t.a[i][j];
            if (aij != 0.0) {
                s1 += h * aij * k1[j];
                s2 += h * aij * k2[j];
            }
        }
        const double v = potential(i);
        k1[i] = (v - mass - lambda) * s2;
        k2[i] = (lambda - v - mass) * s1;
    }
    double d1 = 0.0;
    double d2 = 0.0;
    for (int i = 0; i < S; ++i) {
        d1 += t.b[i] * k1[i];
        d2 += t.b[i] * k2[i];
    }
    y1 += h * d1;
    y2 += h * d2;
}

constexpr double kOverflow = 1e200;

void check_state(const SpinorState& s, double lambda) {
    const bool finite = std::isfinite(s.y1) && std::isfinite(s.y2);
    if (!finite || std::max(std::abs(s.y1), std::abs(s.y2)) > kOverflow) {
        std::ostringstream os;
        os << "integration overflow at x = " << s.x << " for lambda = " << lambda;
        fail(ErrorKind::integration_failure, os.str());
    }
}

}  // namespace

void IntegratorConfig::validate() const {
    if (steps < 64) fail(ErrorKind::invalid_argument, "integrator needs at least 64 steps");
    if (stride < 1 || steps % stride != 0) {
        fail(ErrorKind::invalid_argument, "dense output stride must divide the step count");
    }
}

Shooter::Shooter(DiracProblem problem, IntegratorConfig config)
    : problem_(std::move(problem)), config_(config), step_(0.0), stages_(0) {
    config_.validate();
    step_ = kDomainLength / double(config_.steps);
    const auto tabulate = [this](const auto& tableau) {
        stages_ = static_cast<int>(tableau.c.size());
        stage_potential_.resize(std::size_t(config_.steps) * std::size_t(stages_));
        const auto& v = problem_.potential();
        for (int k = 0; k < config_.steps; ++k) {
            const double x = double(k) * step_;
            for (int i = 0; i < stages_; ++i) {
                stage_potential_[std::size_t(k) * stages_ + i] = v(std::min(x + tableau.c[i] * step_, kDomainLength));
            }
        }
    };
    if (config_.scheme == Scheme::rk4) {
        tabulate(kRk4);
    } else {
        tabulate(kRk8);
    }
}

SpinorState Shooter::initial_state(double lambda) const {
    if (!std::isfinite(lambda)) fail(ErrorKind::invalid_argument, "lambda must be finite");
    const auto& b = problem_.boundary();
    if (b.is_classical()) return {0.0, std::sin(b.alpha()), -std::cos(b.alpha())};
    const auto& p = b.param_dependent_data();
    return {0.0, -(lambda * std::sin(p.alpha) + p.b0), lambda * std::cos(p.alpha) + p.a0};
}

template <class Visit>
void Shooter::run(double lambda, Visit&& visit) const {
    SpinorState s = initial_state(lambda);
    if (s.y1 == 0.0 && s.y2 == 0.0) {
        std::ostringstream os;
        os << "initial spinor vanishes for lambda = " << lambda << " (trivial solution)";
        fail(ErrorKind::integration_failure, os.str());
    }
    visit(s);
    const double m = problem_.mass();
    const double* table = stage_potential_.data();
    for (int k = 0; k < config_.steps; ++k) {
        const double* stage = table + std::size_t(k) * stages_;
        auto at = [stage](int i) { return stage[i]; };
        if (config_.scheme == Scheme::rk4) {
            rk_step(kRk4, lambda, m, step_, s.y1, s.y2, at);
        } else {
            rk_step(kRk8, lambda, m, step_, s.y1, s.y2, at);
        }
        if ((k + 1) % config_.stride == 0) {
            s.x = (k + 1 == config_.steps) ? kDomainLength : double(k + 1) * step_;
            check_state(s, lambda);
            visit(s);
        }
    }
}

std::vector<SpinorState> Shooter::integrate(double lambda) const {
    std::vector<SpinorState> out;
    out.reserve(std::size_t(config_.steps / config_.stride) + 1);
    run(lambda, [&out](const SpinorState& s) { out.push_back(s); });
    return out;
}

SpinorState Shooter::terminal(double lambda) const {
    SpinorState last;
    run(lambda, [&last](const SpinorState& s) { last = s; });
    return last;
}

SpinorState Shooter::advance(double lambda, const SpinorState& from, double to) const {
    const double span = to - from.x;
    SpinorState s = from;
    if (span == 0.0) return s;
    const int count = std::max(1, static_cast<int>(std::ceil(std::abs(span) / step_)));
    const double h = span / double(count);
    const double m = problem_.mass();
    const auto& v = problem_.potential();
    for (int k = 0; k < count; ++k) {
        const double x0 = from.x + double(k) * h;
        if (config_.scheme == Scheme::rk4) {
            rk_step(kRk4, lambda, m, h, s.y1, s.y2, [&](int i) { return v(x0 + kRk4.c[i] * h); });
        } else {
            rk_step(kRk8, lambda, m, h, s.y1, s.y2, [&](int i) { return v(x0 + kRk8.c[i] * h); });
        }
    }
    s.x = to;
    check_state(s, lambda);
    return s;
}

double Shooter::characteristic(double lambda) const {
    const SpinorState end = terminal(lambda);
    const auto& b = problem_.boundary();
    if (b.is_classical()) return end.y1 * std::cos(b.beta()) + end.y2 * std::sin(b.beta());
    const auto& p = b.param_dependent_data();
    return (lambda * std::cos(p.beta) + p.a1) * end.y1 + (lambda * std::sin(p.beta) + p.b1) * end.y2;
}

std::vector<SpinorState> integrate(const DiracProblem& problem, double lambda, const IntegratorConfig& config) {
    return Shooter(problem, config).integrate(lambda);
}

double characteristic(const DiracProblem& problem, double lambda, const IntegratorConfig& config) {
    return Shooter(problem, config).characteristic(lambda);
}

}  // namespace dirac_nodal
