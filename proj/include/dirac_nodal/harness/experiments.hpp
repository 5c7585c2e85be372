#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "dirac_nodal/error.hpp"
#include "dirac_nodal/harness/config.hpp"
#include "dirac_nodal/nodes.hpp"
#include "dirac_nodal/reconstruction.hpp"
#include "dirac_nodal/stability.hpp"

namespace dirac_nodal::harness {

struct RunOptions {
    int jobs = 1;
    /// Fail instead of falling back to a first-order seed when c1 is singular.
    bool seedless = false;
};

/// Solver settings of a config with the run options applied.
EigenSearchConfig search_config(const ProblemConfig& config, const RunOptions& options);

/// n_min..n_max without 0.
std::vector<int> index_window(int n_min, int n_max);

struct SpectrumRun {
    std::vector<EigenRecord> records;
    std::vector<double> unmatched;
};

SpectrumRun run_spectrum(const ProblemConfig& config, int n_min, int n_max, const RunOptions& options);
/// Columns n, lambda, residual.
void write_spectrum_csv(std::ostream& out, const ProblemConfig& config, const SpectrumRun& run);

struct NodesRun {
    EigenRecord record;
    NodalSet nodes;
    std::optional<NodeCountCheck> count;  ///< absent where no prediction exists
};

NodesRun run_nodes(const ProblemConfig& config, int n, int component, const RunOptions& options);
/// Columns j, x, length (length to the next node; empty on the last row).
void write_nodes_csv(std::ostream& out, const ProblemConfig& config, const NodesRun& run);

struct ReconstructRun {
    int n = 0;
    double lambda_numeric = 0.0;
    double lambda_hat = 0.0;
    ReconstructionMode mode = ReconstructionMode::corrected;
    LambdaSource source = LambdaSource::numeric;
    StepFunction approximant{{0.0, kDomainLength}, {0.0}};
    double l1_error = 0.0;                ///< against V
    double l1_error_mean_adjusted = 0.0;  ///< against V - v/pi
};

ReconstructRun run_reconstruct(const ProblemConfig& config, int n, ReconstructionMode mode, LambdaSource source,
                               const RunOptions& options);
/// Columns x_left, x_right, value.
void write_reconstruct_csv(std::ostream& out, const ProblemConfig& config, const ReconstructRun& run);
nlohmann::json reconstruct_report(const ReconstructRun& run);

struct StabilityRun {
    StabilityReport report;
    std::vector<int> window;
};

/// Identity audit of the potentials of configs a and b (the mass of a is used).
StabilityRun run_stability(const ProblemConfig& a, const ProblemConfig& b, int n_min, int n_max,
                           const RunOptions& options);
/// Columns n, S_n, ratio_corrected, ratio_paper_exact; hash combines both configs.
void write_stability_csv(std::ostream& out, const ProblemConfig& a, const ProblemConfig& b, const StabilityRun& run);
nlohmann::json stability_summary(const StabilityRun& run);
std::string combined_hash(const ProblemConfig& a, const ProblemConfig& b);

struct AsymptoticsRow {
    int n = 0;
    double lambda_numeric = 0.0;
    double lambda_asymptotic = 0.0;
    double err_lambda = 0.0;
    double err_node_max = 0.0;
    double err_length_max = 0.0;
};

struct AsymptoticsRun {
    std::vector<AsymptoticsRow> rows;
    double slope_lambda = 0.0;
    double slope_node = 0.0;
    double slope_length = 0.0;
};

/// Second-order eigenvalue, nodal point and nodal length expansions (component 1,
/// evaluated at the numeric eigenvalue) against the solver, with log-log slopes.
AsymptoticsRun run_validate_asymptotics(const ProblemConfig& config, int n_min, int n_max,
                                        const RunOptions& options);
/// Columns n, err_lambda, err_node_max, err_length_max.
void write_asymptotics_csv(std::ostream& out, const ProblemConfig& config, const AsymptoticsRun& run);
nlohmann::json asymptotics_summary(const AsymptoticsRun& run, int n_min, int n_max);

/// Component-1 nodal grid of the config's problem over the window.
GridSequence solve_grid(const ProblemConfig& config, const std::vector<int>& window, const RunOptions& options);
/// Columns n, k, x.
void write_grid_csv(std::ostream& out, const std::string& config_hash, const GridSequence& grid);
GridSequence read_grid_csv(std::istream& in, ProblemCase problem_case);

QuasinodalReport run_quasinodal(const ProblemConfig& config, int n_min, int n_max, const RunOptions& options,
                                const std::optional<GridSequence>& grid = std::nullopt);
/// Columns n, scaled_deviation, l1_error, flagged.
void write_quasinodal_csv(std::ostream& out, const ProblemConfig& config, const QuasinodalReport& report);
nlohmann::json quasinodal_summary(const QuasinodalReport& report);

/// 2 for configuration and validation errors, 3 for solver errors, 1 otherwise.
int exit_code(ErrorKind kind);
nlohmann::json error_json(ErrorKind kind, const std::string& message);

/// JSON number, or null when not finite.
nlohmann::json json_number(double value);

}  // namespace dirac_nodal::harness
