#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dirac_nodal {

enum class ErrorKind {
    invalid_argument,
    boundary_condition,
    integration_failure,
    seed_failure,
    ambiguous_bracket,
    degenerate_component,
    unsupported,
    constants_unavailable,
    iteration_failure,
    row_mismatch,
    case_mismatch,
    config_error,
};

/// Stable, machine-readable name of an error kind (used in the CLI error JSON).
std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace dirac_nodal
