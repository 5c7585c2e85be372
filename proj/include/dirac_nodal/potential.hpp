#pragma once

#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace dirac_nodal {

/// Length of the interval [0, pi] on which every potential lives.
inline constexpr double kDomainLength = std::numbers::pi;

/// Absolute tolerance for adaptive quadrature of analytic potentials.
inline constexpr double kDefaultQuadratureTolerance = 1e-10;

/// Built-in potentials that can be named in configuration files.
namespace library {
struct Zero {};
struct Constant {
    double c = 0.0;
};
struct Sin2x {};
/// V(x) = coeffs[0] + coeffs[1] x + coeffs[2] x^2 + ...
struct Poly {
    std::vector<double> coeffs;
};
/// V(x) = height on [a, pi], 0 on [0, a).
struct Step {
    double a = 0.0;
    double height = 0.0;
};
}  // namespace library

using LibraryEntry =
    std::variant<library::Zero, library::Constant, library::Sin2x, library::Poly, library::Step>;

std::string_view library_name(const LibraryEntry& entry) noexcept;

/// Real potential V on [0, pi].
///
/// Either analytic (a closure, optionally with its antiderivative) or sampled on a
/// uniform grid of M+1 points with linear interpolation. Immutable and cheap to copy.
class Potential {
public:
    using Function = std::function<double(double)>;

    /// Analytic potential. Without an antiderivative, integrals use adaptive
    /// Gauss-Kronrod quadrature split at `breakpoints` (jump or kink locations).
    static Potential analytic(Function value, Function antiderivative = {},
                              std::vector<double> breakpoints = {},
                              double quadrature_tolerance = kDefaultQuadratureTolerance);

    /// Piecewise-linear potential through `values` at x_i = i*pi/M.
    static Potential sampled(std::vector<double> values);

    static Potential named(LibraryEntry entry);

    [[nodiscard]] double operator()(double x) const;

    /// Integral of V over [a, b], 0 <= a <= b <= pi.
    [[nodiscard]] double integral(double a, double b) const;
    /// Integral of V over [0, x].
    [[nodiscard]] double cumulative(double x) const;
    [[nodiscard]] double total() const;

    [[nodiscard]] bool is_sampled() const noexcept;
    /// Grid values of a sampled potential (empty for analytic ones).
    [[nodiscard]] std::span<const double> samples() const noexcept;
    /// Points where V may fail to be smooth (grid nodes for sampled potentials).
    [[nodiscard]] std::span<const double> breakpoints() const noexcept;
    [[nodiscard]] const std::optional<LibraryEntry>& library_entry() const noexcept;

private:
    struct Impl;
    explicit Potential(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Sampled potential from M+1 finite values, M >= 2.
Potential make_potential_sampled(std::span<const double> values);

/// Integral of V over [0, x]; rejects x outside [0, pi].
double cumulative_integral(const Potential& potential, double x);

}  // namespace dirac_nodal
