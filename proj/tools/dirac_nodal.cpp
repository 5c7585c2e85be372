// Command-line front end: spectrum, nodes, reconstruct, stability,
// validate-asymptotics and quasinodal-check.

#include "CLI11.hpp"
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "dirac_nodal/error.hpp"
#include "dirac_nodal/harness/config.hpp"
#include "dirac_nodal/harness/experiments.hpp"
#include "dirac_nodal/harness/log.hpp"

namespace dn = dirac_nodal;
namespace h = dirac_nodal::harness;

namespace {

struct Globals {
    std::string problem;
    std::string out;
    std::string report;
    int jobs = 1;
    bool seedless = false;
};

// Runs `write` against the --out file, or stdout when no file was given.
void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    write(f);
    if (!f) throw std::runtime_error("failed writing " + path);
}

// Summaries go to --report when given, otherwise to stdout unless stdout already
// carries the CSV.
void emit_summary(const Globals& g, const nlohmann::json& summary) {
    if (!g.report.empty()) {
        emit(g.report, [&](std::ostream& os) { os << summary.dump(2) << '\n'; });
    } else if (!g.out.empty()) {
        std::cout << summary.dump(2) << '\n';
    }
}

h::ProblemConfig require_problem(const std::string& path, const char* flag) {
    if (path.empty()) throw dn::Error(dn::ErrorKind::config_error, std::string(flag) + " is required");
    return h::load_problem_config(path);
}

int report_error(const std::string& kind, const std::string& message, int code) {
    std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forward and inverse nodal problems for the one-dimensional Dirac system"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(h::kToolVersion));

    Globals g;
    app.add_option("--problem", g.problem, "problem configuration (JSON)");
    app.add_option("--out", g.out, "output CSV file (stdout when omitted)");
    app.add_option("--report", g.report, "JSON summary file");
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--seedless", g.seedless, "reject runs that need unavailable asymptotic constants");

    int n_min = 3;
    int n_max = 40;
    int n = 20;
    int component = 1;
    std::string mode_text;
    std::string source_text;
    std::string problem_a;
    std::string problem_b;
    std::string grid_path;

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues over an index range");
    spectrum->add_option("--n-min", n_min);
    spectrum->add_option("--n-max", n_max);

    auto* nodes = app.add_subcommand("nodes", "nodal points of one eigenfunction component");
    nodes->add_option("--n", n);
    nodes->add_option("--component", component)->check(CLI::IsMember({1, 2}));

    auto* reconstruct = app.add_subcommand("reconstruct", "step approximant of the potential from nodal data");
    reconstruct->add_option("--n", n);
    reconstruct->add_option("--mode", mode_text)->check(CLI::IsMember({"corrected", "paper_exact"}));
    reconstruct->add_option("--lambda-source", source_text)
        ->check(CLI::IsMember({"integer_seed", "numeric", "asymptotic"}));

    auto* stability = app.add_subcommand("stability", "nodal distance against the L1 distance of two potentials");
    stability->add_option("--problem-a", problem_a);
    stability->add_option("--problem-b", problem_b);
    stability->add_option("--n-min", n_min);
    stability->add_option("--n-max", n_max);

    auto* asym = app.add_subcommand("validate-asymptotics", "errors of the asymptotic expansions over n");
    asym->add_option("--n-min", n_min);
    asym->add_option("--n-max", n_max);

    auto* quasi = app.add_subcommand("quasinodal-check", "admissibility of a nodal grid sequence");
    quasi->add_option("--n-min", n_min);
    quasi->add_option("--n-max", n_max);
    quasi->add_option("--grid", grid_path, "grid CSV (columns n, k, x); solved from the problem when omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        return report_error("UsageError", e.what(), 2);
    }

    try {
        const h::RunOptions options{g.jobs, g.seedless};
        if (spectrum->parsed()) {
            const auto cfg = require_problem(g.problem, "--problem");
            const auto run = h::run_spectrum(cfg, n_min, n_max, options);
            emit(g.out, [&](std::ostream& os) { h::write_spectrum_csv(os, cfg, run); });
        } else if (nodes->parsed()) {
            const auto cfg = require_problem(g.problem, "--problem");
            const auto run = h::run_nodes(cfg, n, component, options);
            emit(g.out, [&](std::ostream& os) { h::write_nodes_csv(os, cfg, run); });
        } else if (reconstruct->parsed()) {
            const auto cfg = require_problem(g.problem, "--problem");
            const auto mode = mode_text.empty() ? cfg.reconstruction : h::parse_reconstruction_mode(mode_text);
            const auto source = source_text.empty() ? cfg.lambda_source : h::parse_lambda_source(source_text);
            const auto run = h::run_reconstruct(cfg, n, mode, source, options);
            emit(g.out, [&](std::ostream& os) { h::write_reconstruct_csv(os, cfg, run); });
            const auto report = h::reconstruct_report(run);
            if (!g.report.empty()) {
                emit(g.report, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
            } else if (!g.out.empty()) {
                std::cout << report.dump(2) << '\n';
            }
        } else if (stability->parsed()) {
            const auto a = require_problem(problem_a.empty() ? g.problem : problem_a, "--problem-a");
            const auto b = require_problem(problem_b, "--problem-b");
            const auto run = h::run_stability(a, b, n_min, n_max, options);
            emit(g.out, [&](std::ostream& os) { h::write_stability_csv(os, a, b, run); });
            emit_summary(g, h::stability_summary(run));
            if (run.report.d0.case_mismatch) {
                return report_error(std::string(dn::to_string(dn::ErrorKind::case_mismatch)),
                                    "problems belong to different boundary families; d_sigma = 1",
                                    h::exit_code(dn::ErrorKind::case_mismatch));
            }
        } else if (asym->parsed()) {
            const auto cfg = require_problem(g.problem, "--problem");
            const auto run = h::run_validate_asymptotics(cfg, n_min, n_max, options);
            emit(g.out, [&](std::ostream& os) { h::write_asymptotics_csv(os, cfg, run); });
            emit_summary(g, h::asymptotics_summary(run, n_min, n_max));
        } else if (quasi->parsed()) {
            const auto cfg = require_problem(g.problem, "--problem");
            std::optional<dn::GridSequence> grid;
            if (!grid_path.empty()) {
                std::ifstream in(grid_path);
                if (!in) throw dn::Error(dn::ErrorKind::config_error, "cannot open grid file " + grid_path);
                grid = h::read_grid_csv(in, cfg.problem.problem_case());
            }
            const auto report = h::run_quasinodal(cfg, n_min, n_max, options, grid);
            emit(g.out, [&](std::ostream& os) { h::write_quasinodal_csv(os, cfg, report); });
            emit_summary(g, h::quasinodal_summary(report));
        }
    } catch (const dn::Error& e) {
        return report_error(std::string(dn::to_string(e.kind())), e.what(), h::exit_code(e.kind()));
    } catch (const std::exception& e) {
        return report_error("InternalError", e.what(), 1);
    }
    return 0;
}
