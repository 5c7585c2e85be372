#include "dirac_nodal/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "dirac_nodal/error.hpp"

namespace dirac_nodal {

namespace {

constexpr double kDomainSlack = 1e-12;

double clamp_to_domain(double x, const char* what) {
    if (!(x >= -kDomainSlack && x <= kDomainLength + kDomainSlack)) {
        std::ostringstream os;
        os << what << " = " << x << " lies outside [0, pi]";
        fail(ErrorKind::invalid_argument, os.str());
    }
    return std::clamp(x, 0.0, kDomainLength);
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string_view library_name(const LibraryEntry& entry) noexcept {
    return std::visit(Overloaded{
                          [](const library::Zero&) { return std::string_view("zero"); },
                          [](const library::Constant&) { return std::string_view("constant"); },
                          [](const library::Sin2x&) { return std::string_view("sin2x"); },
                          [](const library::Poly&) { return std::string_view("poly"); },
                          [](const library::Step&) { return std::string_view("step"); },
                      },
                      entry);
}

struct Potential::Impl {
    // analytic
    Function value;
    Function antiderivative;
    double tolerance = kDefaultQuadratureTolerance;
    // sampled
    std::vector<double> samples;
    std::vector<double> prefix;  // trapezoid prefix sums, prefix[i] = integral over [0, x_i]
    double spacing = 0.0;

    std::vector<double> breakpoints;
    std::optional<LibraryEntry> entry;

    double sampled_value(double x) const {
        const auto cells = samples.size() - 1;
        const double s = x / spacing;
        auto i = static_cast<std::size_t>(std::clamp(std::floor(s), 0.0, double(cells - 1)));
        const double t = s - double(i);
        return samples[i] + t * (samples[i + 1] - samples[i]);
    }

    double sampled_cumulative(double x) const {
        const auto cells = samples.size() - 1;
        if (x >= kDomainLength) return prefix.back();
        const double s = x / spacing;
        auto i = static_cast<std::size_t>(std::clamp(std::floor(s), 0.0, double(cells - 1)));
        const double dx = x - double(i) * spacing;
        const double slope = (samples[i + 1] - samples[i]) / spacing;
        return prefix[i] + samples[i] * dx + 0.5 * slope * dx * dx;
    }

    double quadrature(double a, double b) const {
        using boost::math::quadrature::gauss_kronrod;
        // integrate piecewise between breakpoints so jumps never sit inside a panel
        double sum = 0.0;
        double left = a;
        auto integrate_panel = [&](double lo, double hi) {
            if (hi <= lo) return 0.0;
            return gauss_kronrod<double, 15>::integrate(value, lo, hi, 20, tolerance);
        };
        for (double bp : breakpoints) {
            if (bp <= left) continue;
            if (bp >= b) break;
            sum += integrate_panel(left, bp);
            left = bp;
        }
        return sum + integrate_panel(left, b);
    }
};

Potential Potential::analytic(Function value, Function antiderivative,
                              std::vector<double> breakpoints, double quadrature_tolerance) {
    if (!value) fail(ErrorKind::invalid_argument, "analytic potential needs a value function");
    if (!(quadrature_tolerance > 0.0)) {
        fail(ErrorKind::invalid_argument, "quadrature tolerance must be positive");
    }
    std::sort(breakpoints.begin(), breakpoints.end());
    auto impl = std::make_shared<Impl>();
    impl->value = std::move(value);
    impl->antiderivative = std::move(antiderivative);
    impl->tolerance = quadrature_tolerance;
    impl->breakpoints = std::move(breakpoints);
    return Potential(std::move(impl));
}

Potential Potential::sampled(std::vector<double> values) {
    if (values.size() < 3) {
        fail(ErrorKind::invalid_argument, "sampled potential needs M+1 >= 3 values");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            std::ostringstream os;
            os << "sampled potential value #" << i << " is not finite";
            fail(ErrorKind::invalid_argument, os.str());
        }
    }
    auto impl = std::make_shared<Impl>();
    const auto cells = values.size() - 1;
    impl->spacing = kDomainLength / double(cells);
    impl->prefix.assign(values.size(), 0.0);
    for (std::size_t i = 0; i < cells; ++i) {
        impl->prefix[i + 1] = impl->prefix[i] + 0.5 * impl->spacing * (values[i] + values[i + 1]);
    }
    impl->breakpoints.reserve(values.size());
    for (std::size_t i = 0; i <= cells; ++i) impl->breakpoints.push_back(double(i) * impl->spacing);
    impl->samples = std::move(values);
    return Potential(std::move(impl));
}

Potential Potential::named(LibraryEntry entry) {
    Potential p = std::visit(
        Overloaded{
            [](const library::Zero&) {
                return analytic([](double) { return 0.0; }, [](double) { return 0.0; });
            },
            [](const library::Constant& e) {
                const double c = e.c;
                if (!std::isfinite(c)) fail(ErrorKind::invalid_argument, "constant must be finite");
                return analytic([c](double) { return c; }, [c](double x) { return c * x; });
            },
            [](const library::Sin2x&) {
                return analytic([](double x) { return std::sin(2.0 * x); },
                                [](double x) { return 0.5 * (1.0 - std::cos(2.0 * x)); });
            },
            [](const library::Poly& e) {
                if (e.coeffs.empty()) fail(ErrorKind::invalid_argument, "poly needs coefficients");
                for (double c : e.coeffs) {
                    if (!std::isfinite(c)) fail(ErrorKind::invalid_argument, "poly coefficient not finite");
                }
                auto coeffs = e.coeffs;
                auto horner = [coeffs](double x) {
                    double acc = 0.0;
                    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
                    return acc;
                };
                std::vector<double> integrated(coeffs.size() + 1, 0.0);
                for (std::size_t k = 0; k < coeffs.size(); ++k) integrated[k + 1] = coeffs[k] / double(k + 1);
                auto anti = [integrated](double x) {
                    double acc = 0.0;
                    for (auto it = integrated.rbegin(); it != integrated.rend(); ++it) acc = acc * x + *it;
                    return acc;
                };
                return analytic(horner, anti);
            },
            [](const library::Step& e) {
                const double a = e.a;
                const double h = e.height;
                if (!(a >= 0.0 && a <= kDomainLength) || !std::isfinite(h)) {
                    fail(ErrorKind::invalid_argument, "step needs 0 <= a <= pi and a finite height");
                }
                return analytic([a, h](double x) { return x >= a ? h : 0.0; },
                                [a, h](double x) { return h * std::max(0.0, x - a); },
                                {a});
            },
        },
        entry);
    auto impl = std::make_shared<Impl>(*p.impl_);
    impl->entry = std::move(entry);
    return Potential(std::move(impl));
}

double Potential::operator()(double x) const {
    if (!impl_->samples.empty()) return impl_->sampled_value(std::clamp(x, 0.0, kDomainLength));
    return impl_->value(x);
}

double Potential::integral(double a, double b) const {
    a = clamp_to_domain(a, "lower limit");
    b = clamp_to_domain(b, "upper limit");
    if (a == b) return 0.0;
    if (a > b) return -integral(b, a);
    if (!impl_->samples.empty()) return impl_->sampled_cumulative(b) - impl_->sampled_cumulative(a);
    if (impl_->antiderivative) return impl_->antiderivative(b) - impl_->antiderivative(a);
    return impl_->quadrature(a, b);
}

double Potential::cumulative(double x) const {
    x = clamp_to_domain(x, "x");
    if (!impl_->samples.empty()) return impl_->sampled_cumulative(x);
    if (impl_->antiderivative) return impl_->antiderivative(x) - impl_->antiderivative(0.0);
    return x == 0.0 ? 0.0 : impl_->quadrature(0.0, x);
}

double Potential::total() const { return cumulative(kDomainLength); }

bool Potential::is_sampled() const noexcept { return !impl_->samples.empty(); }

std::span<const double> Potential::samples() const noexcept { return impl_->samples; }

std::span<const double> Potential::breakpoints() const noexcept { return impl_->breakpoints; }

const std::optional<LibraryEntry>& Potential::library_entry() const noexcept { return impl_->entry; }

Potential make_potential_sampled(std::span<const double> values) {
    return Potential::sampled(std::vector<double>(values.begin(), values.end()));
}

double cumulative_integral(const Potential& potential, double x) { return potential.cumulative(x); }

}  // namespace dirac_nodal
