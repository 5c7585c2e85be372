#pragma once

#include <filesystem>
#include "json.hpp"
#include <string>

#include "dirac_nodal/eigen.hpp"
#include "dirac_nodal/integrator.hpp"
#include "dirac_nodal/model.hpp"
#include "dirac_nodal/reconstruction.hpp"

namespace dirac_nodal::harness {

inline constexpr const char* kToolName = "dirac_nodal";
inline constexpr const char* kToolVersion = "0.1.0";

/// A parsed problem file.
///
///   {"mass": 0.5,
///    "potential": {"kind": "named", "name": "sin2x", "params": {}},
///    "boundary": {"kind": "classical", "alpha": 0, "beta": 0},
///    "solver": {"steps": 4096, "lambda_tol": 1e-10},
///    "modes": {"reconstruction": "corrected", "lambda_source": "numeric"}}
///
/// "solver" also accepts stride, scheme ("rk4"/"rk8"), bracket_half_width,
/// scan_points and max_iterations. Unknown keys are rejected.
struct ProblemConfig {
    DiracProblem problem;
    IntegratorConfig integrator;
    EigenSearchConfig search;
    ReconstructionMode reconstruction = ReconstructionMode::corrected;
    LambdaSource lambda_source = LambdaSource::numeric;
    /// Normalised document with every default filled in; keys are sorted.
    nlohmann::json canonical;
    /// 64-bit FNV-1a of canonical.dump(), 16 hex digits.
    std::string hash;
};

/// Throws Error(config_error) with the offending field path (or line and column for
/// syntax errors); boundary violations keep their BoundaryCondition kind.
ProblemConfig parse_problem_config(const std::string& text);
ProblemConfig parse_problem_config(const nlohmann::json& doc);
ProblemConfig load_problem_config(const std::filesystem::path& path);

nlohmann::json potential_to_json(const Potential& potential);
Potential potential_from_json(const nlohmann::json& doc, const std::string& path = "potential");

std::string fnv1a_hex(const std::string& text);

std::string to_string(ReconstructionMode mode);
std::string to_string(LambdaSource source);
ReconstructionMode parse_reconstruction_mode(const std::string& text);
LambdaSource parse_lambda_source(const std::string& text);

}  // namespace dirac_nodal::harness
