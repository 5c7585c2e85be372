#include "dirac_nodal/harness/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dirac_nodal/asymptotics.hpp"
#include "dirac_nodal/eigen.hpp"
#include "dirac_nodal/fit.hpp"
#include "dirac_nodal/harness/csv.hpp"
#include "dirac_nodal/harness/log.hpp"
#include "dirac_nodal/harness/parallel.hpp"

namespace dirac_nodal::harness {

using nlohmann::json;

namespace {

void check_window(int n_min, int n_max) {
    if (n_min > n_max) fail(ErrorKind::invalid_argument, "--n-min must not exceed --n-max");
}

std::vector<double> column(const std::vector<AsymptoticsRow>& rows, double AsymptoticsRow::*field) {
    std::vector<double> out;
    for (const auto& r : rows) out.push_back(r.*field);
    return out;
}

}  // namespace

EigenSearchConfig search_config(const ProblemConfig& config, const RunOptions& options) {
    EigenSearchConfig s = config.search;
    s.strict_seed = s.strict_seed || options.seedless;
    return s;
}

std::vector<int> index_window(int n_min, int n_max) {
    check_window(n_min, n_max);
    std::vector<int> w;
    for (int n = n_min; n <= n_max; ++n) {
        if (n != 0) w.push_back(n);
    }
    return w;
}

SpectrumRun run_spectrum(const ProblemConfig& config, int n_min, int n_max, const RunOptions& options) {
    const Shooter shooter(config.problem, config.integrator);
    const auto search = search_config(config, options);
    const auto window = index_window(n_min, n_max);
    SpectrumRun run;
    run.records = parallel_map(window.size(), options.jobs,
                               [&](std::size_t i) { return find_eigenvalue(shooter, window[i], search); });
    check_ordering(run.records);
    run.unmatched = find_unmatched_roots(shooter, run.records, search);
    for (double l : run.unmatched) {
        std::ostringstream os;
        os << "unmatched root of the characteristic function at lambda = " << format_number(l);
        log(LogLevel::info, os.str());
    }
    return run;
}

void write_spectrum_csv(std::ostream& out, const ProblemConfig& config, const SpectrumRun& run) {
    CsvWriter w(out, {"n", "lambda", "residual"}, config.hash);
    for (const auto& r : run.records) w.row({static_cast<long long>(r.index), r.lambda, r.residual});
}

NodesRun run_nodes(const ProblemConfig& config, int n, int component, const RunOptions& options) {
    const Shooter shooter(config.problem, config.integrator);
    const auto rec = find_eigenvalue(shooter, n, search_config(config, options));
    NodesRun run{rec, extract_nodes(shooter, rec, component), std::nullopt};
    try {
        run.count = check_node_count(config.problem.boundary(), run.nodes);
        std::ostringstream os;
        os << "n = " << n << ", component " << component << ": " << run.count->observed << " nodes, predicted "
           << run.count->predicted << (run.count->matches ? "" : " (mismatch)");
        log(LogLevel::info, os.str());
    } catch (const Error& e) {
        log(LogLevel::debug, std::string("no node count prediction: ") + e.what());
    }
    return run;
}

void write_nodes_csv(std::ostream& out, const ProblemConfig& config, const NodesRun& run) {
    CsvWriter w(out, {"j", "x", "length"}, config.hash);
    const auto pts = run.nodes.points();
    const auto lengths = run.nodes.lengths();
    for (std::size_t j = 0; j < pts.size(); ++j) {
        w.row({static_cast<long long>(j + 1), pts[j],
               j < lengths.size() ? CsvCell(lengths[j]) : CsvCell(std::string())});
    }
}

ReconstructRun run_reconstruct(const ProblemConfig& config, int n, ReconstructionMode mode, LambdaSource source,
                               const RunOptions& options) {
    const Shooter shooter(config.problem, config.integrator);
    const auto rec = find_eigenvalue(shooter, n, search_config(config, options));
    const auto nodes = extract_nodes(shooter, rec, 1);
    ReconstructRun run;
    run.n = n;
    run.lambda_numeric = rec.lambda;
    run.lambda_hat = lambda_hat(config.problem, n, source, rec.lambda);
    run.mode = mode;
    run.source = source;
    run.approximant = reconstruct_step(nodes, config.problem, run.lambda_hat, mode);
    const auto& v = config.problem.potential();
    run.l1_error = l1_error(run.approximant, v);
    run.l1_error_mean_adjusted = l1_error(run.approximant, v, mean_shift(v, config.problem.boundary()));
    return run;
}

void write_reconstruct_csv(std::ostream& out, const ProblemConfig& config, const ReconstructRun& run) {
    CsvWriter w(out, {"x_left", "x_right", "value"}, config.hash);
    const auto& b = run.approximant.breakpoints();
    const auto& v = run.approximant.values();
    for (std::size_t k = 0; k < v.size(); ++k) w.row({b[k], b[k + 1], v[k]});
}

json reconstruct_report(const ReconstructRun& run) {
    return {{"n", run.n},
            {"l1_error", json_number(run.l1_error)},
            {"l1_error_mean_adjusted", json_number(run.l1_error_mean_adjusted)},
            {"mode", to_string(run.mode)},
            {"lambda_source", to_string(run.source)},
            {"lambda_hat", json_number(run.lambda_hat)},
            {"lambda_numeric", json_number(run.lambda_numeric)}};
}

GridSequence solve_grid(const ProblemConfig& config, const std::vector<int>& window, const RunOptions& options) {
    const Shooter shooter(config.problem, config.integrator);
    const auto search = search_config(config, options);
    const auto rows = parallel_map(window.size(), options.jobs, [&](std::size_t i) {
        const auto rec = find_eigenvalue(shooter, window[i], search);
        const auto set = extract_nodes(shooter, rec, 1);
        return std::vector<double>(set.points().begin(), set.points().end());
    });
    std::map<int, std::vector<double>> grid;
    for (std::size_t i = 0; i < window.size(); ++i) grid[window[i]] = rows[i];
    return GridSequence(config.problem.problem_case(), std::move(grid));
}

std::string combined_hash(const ProblemConfig& a, const ProblemConfig& b) {
    return fnv1a_hex(a.hash + "+" + b.hash);
}

StabilityRun run_stability(const ProblemConfig& a, const ProblemConfig& b, int n_min, int n_max,
                           const RunOptions& options) {
    StabilityRun run;
    run.window = index_window(n_min, n_max);
    if (a.problem.mass() != b.problem.mass()) {
        log(LogLevel::info, "problems have different masses; S_n uses the mass of problem a");
    }
    if (a.problem.problem_case() != b.problem.problem_case()) {
        const GridSequence x(a.problem.problem_case(), {});
        const GridSequence y(b.problem.problem_case(), {});
        run.report = stability_identity_report(x, y, a.problem, b.problem, run.window);
        return run;
    }
    const auto x = solve_grid(a, run.window, options);
    const auto y = solve_grid(b, run.window, options);
    run.report = stability_identity_report(x, y, a.problem, b.problem, run.window);
    return run;
}

void write_stability_csv(std::ostream& out, const ProblemConfig& a, const ProblemConfig& b, const StabilityRun& run) {
    CsvWriter w(out, {"n", "S_n", "ratio_corrected", "ratio_paper_exact"}, combined_hash(a, b));
    for (const auto& r : run.report.rows) {
        w.row({static_cast<long long>(r.n), r.s, r.ratio_corrected, r.ratio_paper_exact});
    }
}

json stability_summary(const StabilityRun& run) {
    const auto& r = run.report;
    return {{"d0_estimate", json_number(r.d0.d0)},
            {"d0_infinite", r.d0.infinite},
            {"d_sigma", json_number(r.d_sigma)},
            {"case_mismatch", r.d0.case_mismatch},
            {"norm_corrected", json_number(r.norm_corrected)},
            {"norm_paper_exact", json_number(r.norm_paper_exact)},
            {"trend_non_increasing", r.trend_non_increasing},
            {"verdict", r.verdict}};
}

AsymptoticsRun run_validate_asymptotics(const ProblemConfig& config, int n_min, int n_max,
                                        const RunOptions& options) {
    const Shooter shooter(config.problem, config.integrator);
    const auto search = search_config(config, options);
    const auto window = index_window(n_min, n_max);
    const auto& problem = config.problem;
    AsymptoticsRun run;
    run.rows = parallel_map(window.size(), options.jobs, [&](std::size_t i) {
        const int n = window[i];
        const auto rec = find_eigenvalue(shooter, n, search);
        AsymptoticsRow row;
        row.n = n;
        row.lambda_numeric = rec.lambda;
        row.lambda_asymptotic = lambda_asym(problem, n, 2);
        row.err_lambda = std::abs(rec.lambda - row.lambda_asymptotic);

        const auto nodes = extract_nodes(shooter, rec, 1);
        const auto asym = nodal_points_asym(problem, n, 1, 2, rec.lambda);
        // label each numeric node by its nearest asymptotic point
        if (asym.empty() && !nodes.empty()) fail(ErrorKind::iteration_failure, "no asymptotic nodal points in (0, pi)");
        std::vector<int> labels;
        for (double x : nodes.points()) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < asym.size(); ++k) {
                if (std::abs(asym[k].x - x) < std::abs(asym[best].x - x)) best = k;
            }
            labels.push_back(asym[best].label);
            row.err_node_max = std::max(row.err_node_max, std::abs(asym[best].x - x));
        }
        const auto lengths = nodes.lengths();
        for (std::size_t j = 0; j < lengths.size(); ++j) {
            if (labels[j + 1] != labels[j] + 1) continue;
            const double l = nodal_length_asym(problem, n, labels[j], 1, 2, rec.lambda);
            row.err_length_max = std::max(row.err_length_max, std::abs(l - lengths[j]));
        }
        return row;
    });
    std::vector<double> ns;
    for (const auto& r : run.rows) ns.push_back(r.n);
    run.slope_lambda = log_log_slope(ns, column(run.rows, &AsymptoticsRow::err_lambda));
    run.slope_node = log_log_slope(ns, column(run.rows, &AsymptoticsRow::err_node_max));
    run.slope_length = log_log_slope(ns, column(run.rows, &AsymptoticsRow::err_length_max));
    return run;
}

void write_asymptotics_csv(std::ostream& out, const ProblemConfig& config, const AsymptoticsRun& run) {
    CsvWriter w(out, {"n", "err_lambda", "err_node_max", "err_length_max"}, config.hash);
    for (const auto& r : run.rows) w.row({static_cast<long long>(r.n), r.err_lambda, r.err_node_max, r.err_length_max});
}

json asymptotics_summary(const AsymptoticsRun& run, int n_min, int n_max) {
    return {{"n_min", n_min},
            {"n_max", n_max},
            {"slope_lambda", json_number(run.slope_lambda)},
            {"slope_node", json_number(run.slope_node)},
            {"slope_length", json_number(run.slope_length)}};
}

void write_grid_csv(std::ostream& out, const std::string& config_hash, const GridSequence& grid) {
    CsvWriter w(out, {"n", "k", "x"}, config_hash);
    for (const auto& [n, row] : grid.rows()) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            w.row({static_cast<long long>(n), static_cast<long long>(k + 1), row[k]});
        }
    }
}

GridSequence read_grid_csv(std::istream& in, ProblemCase problem_case) {
    const auto t = read_csv(in);
    std::map<int, std::map<int, double>> entries;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const double n = t.number(i, "n");
        const double k = t.number(i, "k");
        if (n != std::floor(n) || k != std::floor(k) || k < 1) {
            fail(ErrorKind::invalid_argument, "grid CSV needs integer n and positive integer k");
        }
        entries[static_cast<int>(n)][static_cast<int>(k)] = t.number(i, "x");
    }
    std::map<int, std::vector<double>> rows;
    for (const auto& [n, row] : entries) {
        int expected = 1;
        for (const auto& [k, x] : row) {
            if (k != expected++) {
                fail(ErrorKind::invalid_argument, "grid CSV row " + std::to_string(n) + " skips an index k");
            }
            rows[n].push_back(x);
        }
    }
    return GridSequence(problem_case, std::move(rows));
}

QuasinodalReport run_quasinodal(const ProblemConfig& config, int n_min, int n_max, const RunOptions& options,
                                const std::optional<GridSequence>& grid) {
    const auto window = index_window(n_min, n_max);
    if (grid) return quasinodal_check(*grid, config.problem, window);
    return quasinodal_check(solve_grid(config, window, options), config.problem, window);
}

void write_quasinodal_csv(std::ostream& out, const ProblemConfig& config, const QuasinodalReport& report) {
    CsvWriter w(out, {"n", "scaled_deviation", "l1_error", "flagged"}, config.hash);
    for (const auto& r : report.rows) {
        w.row({static_cast<long long>(r.n), r.scaled_deviation, r.l1_error, static_cast<long long>(r.flagged)});
    }
}

json quasinodal_summary(const QuasinodalReport& report) {
    return {{"measured_sup", json_number(report.measured_sup)},
            {"admissibility_constant", json_number(report.constant)},
            {"growth_slope", json_number(report.growth_slope)},
            {"bounded", report.bounded},
            {"asymptotics_pass", report.asymptotics_pass},
            {"l1_slope", json_number(report.l1_slope)},
            {"l1_decreasing", report.l1_decreasing},
            {"flagged_rows", report.flagged_rows},
            {"pass", report.pass}};
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::config_error:
        case ErrorKind::invalid_argument:
        case ErrorKind::boundary_condition:
            return 2;
        case ErrorKind::integration_failure:
        case ErrorKind::seed_failure:
        case ErrorKind::ambiguous_bracket:
        case ErrorKind::degenerate_component:
        case ErrorKind::unsupported:
        case ErrorKind::constants_unavailable:
        case ErrorKind::iteration_failure:
        case ErrorKind::row_mismatch:
        case ErrorKind::case_mismatch:
            return 3;
    }
    return 1;
}

json error_json(ErrorKind kind, const std::string& message) {
    return {{"error", std::string(to_string(kind))}, {"message", message}};
}

json json_number(double value) {
    if (!std::isfinite(value)) return nullptr;
    return value;
}

}  // namespace dirac_nodal::harness
