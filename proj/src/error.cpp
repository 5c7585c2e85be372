#include "dirac_nodal/error.hpp"

namespace dirac_nodal {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_argument: return "InvalidArgument";
        case ErrorKind::boundary_condition: return "BoundaryCondition";
        case ErrorKind::integration_failure: return "IntegrationFailure";
        case ErrorKind::seed_failure: return "SeedFailure";
        case ErrorKind::ambiguous_bracket: return "AmbiguousBracket";
        case ErrorKind::degenerate_component: return "DegenerateComponent";
        case ErrorKind::unsupported: return "Unsupported";
        case ErrorKind::constants_unavailable: return "ConstantsUnavailable";
        case ErrorKind::iteration_failure: return "IterationFailure";
        case ErrorKind::row_mismatch: return "RowMismatch";
        case ErrorKind::case_mismatch: return "CaseMismatch";
        case ErrorKind::config_error: return "ConfigError";
    }
    return "Unknown";
}

}  // namespace dirac_nodal
