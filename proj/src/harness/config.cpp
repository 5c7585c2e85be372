#include "dirac_nodal/harness/config.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "dirac_nodal/error.hpp"

namespace dirac_nodal::harness {

using nlohmann::json;

namespace {

[[noreturn]] void config_fail(const std::string& path, const std::string& what) {
    fail(ErrorKind::config_error, path.empty() ? what : path + ": " + what);
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) config_fail(path, "expected an object");
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& item : obj.items()) {
        if (!keys.contains(item.key())) config_fail(join(path, item.key()), "unknown key");
    }
}

double number_at(const json& obj, const std::string& path, const char* key, std::optional<double> fallback = {}) {
    const auto where = join(path, key);
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        config_fail(where, "missing required number");
    }
    const auto& v = obj.at(key);
    if (!v.is_number()) config_fail(where, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) config_fail(where, "must be finite");
    return d;
}

int integer_at(const json& obj, const std::string& path, const char* key, int fallback) {
    const auto where = join(path, key);
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) config_fail(where, "expected an integer");
    return v.get<int>();
}

std::string string_at(const json& obj, const std::string& path, const char* key,
                      std::optional<std::string> fallback = {}) {
    const auto where = join(path, key);
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        config_fail(where, "missing required string");
    }
    const auto& v = obj.at(key);
    if (!v.is_string()) config_fail(where, "expected a string");
    return v.get<std::string>();
}

// Converts library errors raised while building a section into config errors
// pointing at that section; boundary violations keep their own kind.
template <class F>
auto within(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::config_error) throw;
        const auto kind = e.kind() == ErrorKind::boundary_condition ? e.kind() : ErrorKind::config_error;
        throw Error(kind, path + ": " + e.what());
    }
}

std::string scheme_name(Scheme s) { return s == Scheme::rk4 ? "rk4" : "rk8"; }

}  // namespace

std::string to_string(ReconstructionMode mode) {
    return mode == ReconstructionMode::corrected ? "corrected" : "paper_exact";
}

std::string to_string(LambdaSource source) {
    switch (source) {
        case LambdaSource::integer_seed:
            return "integer_seed";
        case LambdaSource::numeric:
            return "numeric";
        case LambdaSource::asymptotic:
            return "asymptotic";
    }
    return "numeric";
}

ReconstructionMode parse_reconstruction_mode(const std::string& text) {
    if (text == "corrected") return ReconstructionMode::corrected;
    if (text == "paper_exact") return ReconstructionMode::paper_exact;
    config_fail("modes.reconstruction", "expected \"corrected\" or \"paper_exact\", got \"" + text + "\"");
}

LambdaSource parse_lambda_source(const std::string& text) {
    if (text == "integer_seed") return LambdaSource::integer_seed;
    if (text == "numeric") return LambdaSource::numeric;
    if (text == "asymptotic") return LambdaSource::asymptotic;
    config_fail("modes.lambda_source",
                "expected \"integer_seed\", \"numeric\" or \"asymptotic\", got \"" + text + "\"");
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

json potential_to_json(const Potential& potential) {
    if (potential.is_sampled()) {
        const auto s = potential.samples();
        return {{"kind", "sampled"}, {"values", std::vector<double>(s.begin(), s.end())}};
    }
    const auto& entry = potential.library_entry();
    if (!entry) fail(ErrorKind::unsupported, "only sampled and library potentials are serialisable");
    json params = json::object();
    if (const auto* c = std::get_if<library::Constant>(&*entry)) params["c"] = c->c;
    if (const auto* p = std::get_if<library::Poly>(&*entry)) params["coeffs"] = p->coeffs;
    if (const auto* s = std::get_if<library::Step>(&*entry)) {
        params["a"] = s->a;
        params["height"] = s->height;
    }
    return {{"kind", "named"}, {"name", std::string(library_name(*entry))}, {"params", params}};
}

Potential potential_from_json(const json& doc, const std::string& path) {
    if (!doc.is_object()) config_fail(path, "expected an object");
    const auto kind = string_at(doc, path, "kind");
    if (kind == "sampled") {
        only_keys(doc, path, {"kind", "values"});
        if (!doc.contains("values") || !doc.at("values").is_array()) config_fail(join(path, "values"), "expected an array");
        std::vector<double> values;
        for (std::size_t i = 0; i < doc.at("values").size(); ++i) {
            const auto& v = doc.at("values").at(i);
            if (!v.is_number()) config_fail(join(path, "values") + "[" + std::to_string(i) + "]", "expected a number");
            values.push_back(v.get<double>());
        }
        return within(join(path, "values"), [&] { return make_potential_sampled(values); });
    }
    if (kind != "named") config_fail(join(path, "kind"), "expected \"sampled\" or \"named\", got \"" + kind + "\"");
    only_keys(doc, path, {"kind", "name", "params"});
    const auto name = string_at(doc, path, "name");
    const json params = doc.contains("params") ? doc.at("params") : json::object();
    const auto ppath = join(path, "params");
    if (!params.is_object()) config_fail(ppath, "expected an object");
    LibraryEntry entry;
    if (name == "zero") {
        only_keys(params, ppath, {});
        entry = library::Zero{};
    } else if (name == "constant") {
        only_keys(params, ppath, {"c"});
        entry = library::Constant{number_at(params, ppath, "c")};
    } else if (name == "sin2x") {
        only_keys(params, ppath, {});
        entry = library::Sin2x{};
    } else if (name == "poly") {
        only_keys(params, ppath, {"coeffs"});
        if (!params.contains("coeffs") || !params.at("coeffs").is_array()) {
            config_fail(join(ppath, "coeffs"), "expected an array of numbers");
        }
        library::Poly p;
        for (const auto& c : params.at("coeffs")) {
            if (!c.is_number()) config_fail(join(ppath, "coeffs"), "expected an array of numbers");
            p.coeffs.push_back(c.get<double>());
        }
        entry = std::move(p);
    } else if (name == "step") {
        only_keys(params, ppath, {"a", "height"});
        entry = library::Step{number_at(params, ppath, "a"), number_at(params, ppath, "height")};
    } else {
        config_fail(join(path, "name"), "unknown library potential \"" + name + "\"");
    }
    return within(path, [&] { return Potential::named(std::move(entry)); });
}

ProblemConfig parse_problem_config(const json& doc) {
    only_keys(doc, "", {"mass", "potential", "boundary", "solver", "modes"});
    const double mass = number_at(doc, "", "mass");
    if (!doc.contains("potential")) config_fail("potential", "missing required object");
    const Potential potential = potential_from_json(doc.at("potential"));

    if (!doc.contains("boundary")) config_fail("boundary", "missing required object");
    const auto& b = doc.at("boundary");
    if (!b.is_object()) config_fail("boundary", "expected an object");
    const auto bkind = string_at(b, "boundary", "kind");
    json boundary_json;
    BoundaryForm boundary = [&] {
        if (bkind == "classical") {
            only_keys(b, "boundary", {"kind", "alpha", "beta"});
            const double alpha = number_at(b, "boundary", "alpha");
            const double beta = number_at(b, "boundary", "beta");
            boundary_json = {{"kind", bkind}, {"alpha", alpha}, {"beta", beta}};
            return within("boundary", [&] { return BoundaryForm::classical(alpha, beta); });
        }
        if (bkind == "param_dependent") {
            only_keys(b, "boundary", {"kind", "alpha", "beta", "a0", "b0", "a1", "b1"});
            const double alpha = number_at(b, "boundary", "alpha");
            const double beta = number_at(b, "boundary", "beta");
            const double a0 = number_at(b, "boundary", "a0");
            const double b0 = number_at(b, "boundary", "b0");
            const double a1 = number_at(b, "boundary", "a1");
            const double b1 = number_at(b, "boundary", "b1");
            boundary_json = {{"kind", bkind}, {"alpha", alpha}, {"beta", beta}, {"a0", a0},
                             {"b0", b0},      {"a1", a1},       {"b1", b1}};
            return within("boundary",
                          [&] { return BoundaryForm::param_dependent(alpha, beta, a0, b0, a1, b1); });
        }
        config_fail("boundary.kind", "expected \"classical\" or \"param_dependent\", got \"" + bkind + "\"");
    }();

    IntegratorConfig integrator;
    EigenSearchConfig search;
    const json solver = doc.contains("solver") ? doc.at("solver") : json::object();
    only_keys(solver, "solver",
              {"steps", "lambda_tol", "stride", "scheme", "bracket_half_width", "scan_points", "max_iterations"});
    integrator.steps = integer_at(solver, "solver", "steps", integrator.steps);
    integrator.stride = integer_at(solver, "solver", "stride", integrator.stride);
    const auto scheme = string_at(solver, "solver", "scheme", scheme_name(integrator.scheme));
    if (scheme == "rk4") {
        integrator.scheme = Scheme::rk4;
    } else if (scheme == "rk8") {
        integrator.scheme = Scheme::rk8;
    } else {
        config_fail("solver.scheme", "expected \"rk4\" or \"rk8\", got \"" + scheme + "\"");
    }
    search.lambda_tolerance = number_at(solver, "solver", "lambda_tol", search.lambda_tolerance);
    search.bracket_half_width = number_at(solver, "solver", "bracket_half_width", search.bracket_half_width);
    search.scan_points = integer_at(solver, "solver", "scan_points", search.scan_points);
    search.max_iterations = integer_at(solver, "solver", "max_iterations", search.max_iterations);
    within("solver", [&] {
        integrator.validate();
        search.validate();
        return 0;
    });

    const json modes = doc.contains("modes") ? doc.at("modes") : json::object();
    only_keys(modes, "modes", {"reconstruction", "lambda_source"});
    const auto mode = parse_reconstruction_mode(string_at(modes, "modes", "reconstruction", "corrected"));
    const auto source = parse_lambda_source(string_at(modes, "modes", "lambda_source", "numeric"));

    DiracProblem problem = within("mass", [&] { return DiracProblem(mass, potential, boundary); });

    json canonical = {
        {"mass", mass},
        {"potential", potential_to_json(potential)},
        {"boundary", boundary_json},
        {"solver",
         {{"steps", integrator.steps},
          {"stride", integrator.stride},
          {"scheme", scheme_name(integrator.scheme)},
          {"lambda_tol", search.lambda_tolerance},
          {"bracket_half_width", search.bracket_half_width},
          {"scan_points", search.scan_points},
          {"max_iterations", search.max_iterations}}},
        {"modes", {{"reconstruction", to_string(mode)}, {"lambda_source", to_string(source)}}},
    };
    const auto hash = fnv1a_hex(canonical.dump());
    return ProblemConfig{std::move(problem), integrator, search, mode, source, std::move(canonical), hash};
}

ProblemConfig parse_problem_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // locate the failing byte as line:column for the diagnostic
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::ostringstream os;
        os << "line " << line << ", column " << column << ": invalid JSON";
        fail(ErrorKind::config_error, os.str());
    }
    return parse_problem_config(doc);
}

ProblemConfig load_problem_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::config_error, "cannot open problem file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_problem_config(buf.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.what());
    }
}

}  // namespace dirac_nodal::harness
