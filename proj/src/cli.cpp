#include "geomlab/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "geomlab/constants.hpp"
#include "geomlab/io.hpp"
#include "geomlab/theorems.hpp"

namespace geomlab {

namespace {

double parse_decimal(const std::string& tok, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
        throw input_error(std::string(what) + ": expected a decimal, got '" + tok + "'");
    return v;
}

int parse_dim_field(const std::string& tok) {
    if (tok.rfind("dim=", 0) != 0)
        throw input_error("space descriptor: expected dim=<n>, got '" + tok + "'");
    char* end = nullptr;
    const long v = std::strtol(tok.c_str() + 4, &end, 10);
    if (end == tok.c_str() + 4 || *end != '\0' || v < 1 || v > 64)
        throw input_error("space descriptor: bad dimension '" + tok + "'");
    return static_cast<int>(v);
}

std::vector<Vector> read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("polygon: cannot read file '" + path + "'");
    std::vector<Vector> vertices;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty()) continue;
        const std::size_t comma = trimmed.find(',');
        if (comma == std::string::npos || trimmed.find(',', comma + 1) != std::string::npos)
            throw input_error("polygon: each line needs exactly two coordinates: " + line);
        vertices.push_back(Vector{parse_decimal(trimmed.substr(0, comma), "polygon vertex"),
                                  parse_decimal(trimmed.substr(comma + 1), "polygon vertex")});
    }
    if (vertices.size() < 2) throw input_error("polygon: need at least 2 vertices");
    return vertices;
}

// Quick seeded axiom audit run as part of descriptor parsing.
void audit_axioms(const NormedSpace& space) {
    for (const CheckItem& it : validate_norm_axioms(space, 200, 1))
        if (it.status == CheckStatus::fail)
            throw input_error("space failed norm-axiom validation: " + it.name);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = s.find(sep, pos);
        parts.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return parts;
}

}  // namespace

NormedSpace parse_space_descriptor(const std::string& text) {
    if (text.rfind("polygon:", 0) == 0) {
        const std::string path = text.substr(8);
        if (path.empty()) throw input_error("polygon: missing file path");
        NormedSpace space(PolygonGauge{read_polygon_file(path)}, text);
        audit_axioms(space);
        return space;
    }
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() == 3 && parts[0] == "lp") {
        double p;
        if (parts[1] == "inf") {
            p = std::numeric_limits<double>::infinity();
        } else {
            p = parse_decimal(parts[1], "lp exponent");
            if (p < 1.0) throw input_error("lp exponent must satisfy p >= 1");
        }
        NormedSpace space(LpNorm{p, parse_dim_field(parts[2])}, text);
        audit_axioms(space);
        return space;
    }
    if (parts.size() == 2 && parts[0] == "c0trunc") {
        NormedSpace space(MaxPlusWeightedL2{parse_dim_field(parts[1])}, text);
        audit_axioms(space);
        return space;
    }
    throw input_error("unrecognized space descriptor '" + text +
                      "' (expected lp:<p>:dim=<n>, c0trunc:dim=<n>, or polygon:<path>)");
}

std::vector<double> parse_lambda_spec(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw input_error("lambda range must be start:end:step");
        const double start = parse_decimal(parts[0], "lambda range start");
        const double end = parse_decimal(parts[1], "lambda range end");
        const double step = parse_decimal(parts[2], "lambda range step");
        if (step <= 0.0 || end < start) throw input_error("lambda range must ascend");
        for (int k = 0;; ++k) {
            double v = start + k * step;
            v = std::round(v * 1e12) / 1e12;  // keep grid nodes on tidy decimals
            if (v > end + 1e-12) break;
            out.push_back(std::min(v, end));
            if (k > 1000000) throw input_error("lambda range too fine");
        }
    } else {
        for (const std::string& tok : split(text, ','))
            out.push_back(parse_decimal(tok, "lambda"));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] < 0.0 || out[i] > 1.0) throw input_error("lambda values must lie in [0, 1]");
        if (i > 0 && out[i] <= out[i - 1])
            throw input_error("lambda values must be strictly increasing");
    }
    if (out.empty()) throw input_error("empty lambda specification");
    return out;
}

namespace {

struct OutputTarget {
    std::string path;  // empty = standard output

    void write(const std::string& payload, std::ostream& fallback) const {
        if (path.empty()) {
            fallback << payload << '\n';
            return;
        }
        std::ofstream f(path);
        if (!f) throw input_error("cannot open output file '" + path + "'");
        f << payload << '\n';
    }
};

void apply_env_seed(EstimatorConfig& cfg) {
    if (const char* env = std::getenv("GEOMLAB_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw input_error(std::string("GEOMLAB_SEED is not an integer: ") + env);
        cfg.seed = v;
    }
}

void add_config_options(CLI::App* cmd, EstimatorConfig& cfg) {
    cmd->add_option("--grid-resolution", cfg.grid_resolution, "dim-2 theta nodes per axis");
    cmd->add_option("--refine-rounds", cfg.refine_rounds, "window refinement rounds");
    cmd->add_option("--starts", cfg.starts, "multi-start count for dim >= 3");
    cmd->add_option("--local-iters", cfg.local_iters, "pattern-search sweep cap");
    cmd->add_option("--seed", cfg.seed, "search seed (GEOMLAB_SEED overrides)");
    cmd->add_option("--tol", cfg.tol, "convergence threshold");
}

int exit_code_for(const CheckReport& rep) {
    if (!rep.all_pass()) return 2;
    if (!rep.estimates_converged) return 3;
    return 0;
}

}  // namespace

int geomlab_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"geometric constants of finite-dimensional normed spaces"};
    app.require_subcommand(1);

    std::string space_text, which = "ly", lambdas_text, out_path, format;
    double lambda_opt = std::numeric_limits<double>::quiet_NaN();
    double eps_opt = std::numeric_limits<double>::quiet_NaN();
    EstimatorConfig cfg;

    CLI::App* c_const = app.add_subcommand("constant", "estimate one constant");
    c_const->add_option("--space", space_text, "space descriptor")->required();
    c_const->add_option("--which", which, "ly | cnj | cnjp | e | delta")->required();
    c_const->add_option("--lambda", lambda_opt, "lambda for --which ly");
    c_const->add_option("--eps", eps_opt, "eps for --which delta");
    c_const->add_option("--out", out_path, "output file (default stdout)");
    add_config_options(c_const, cfg);

    CLI::App* c_sweep = app.add_subcommand("sweep", "lambda sweep of the ly constant");
    c_sweep->add_option("--space", space_text, "space descriptor")->required();
    c_sweep->add_option("--which", which, "only ly supports sweeping");
    c_sweep->add_option("--lambdas", lambdas_text, "start:end:step or comma list")->required();
    c_sweep->add_option("--out", out_path, "output file (default stdout)");
    c_sweep->add_option("--format", format, "csv (default) or json");
    add_config_options(c_sweep, cfg);

    CLI::App* c_check = app.add_subcommand("check", "run the identity/inequality suite");
    c_check->add_option("--space", space_text, "space descriptor")->required();
    c_check->add_option("--lambdas", lambdas_text, "lambda grid (default 0:1:0.05)");
    c_check->add_option("--out", out_path, "output file (default stdout)");
    add_config_options(c_check, cfg);

    CLI::App* c_classify = app.add_subcommand("classify", "threshold classification");
    c_classify->add_option("--space", space_text, "space descriptor")->required();
    c_classify->add_option("--out", out_path, "output file (default stdout)");
    add_config_options(c_classify, cfg);

    app.add_subcommand("spaces", "list the built-in catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    }

    try {
        apply_env_seed(cfg);
        OutputTarget target{out_path};

        if (app.got_subcommand("spaces")) {
            for (const NormedSpace& s : catalog_spaces()) out << s.label() << '\n';
            return 0;
        }

        const NormedSpace space = parse_space_descriptor(space_text);

        if (app.got_subcommand("constant")) {
            EstimateResult r;
            if (which == "ly") {
                if (std::isnan(lambda_opt))
                    throw input_error("--which ly requires --lambda");
                r = estimate_lprime_y(space, lambda_opt, cfg);
            } else if (which == "cnj") {
                r = estimate_cnj(space, cfg);
            } else if (which == "cnjp") {
                r = estimate_cnj_prime_and_E(space, cfg).first;
            } else if (which == "e") {
                r = estimate_cnj_prime_and_E(space, cfg).second;
            } else if (which == "delta") {
                if (std::isnan(eps_opt)) throw input_error("--which delta requires --eps");
                r = estimate_delta(space, eps_opt, cfg);
            } else {
                throw input_error("unknown constant selector '" + which + "'");
            }
            target.write(to_json(r), out);
            return r.converged ? 0 : 3;
        }

        if (app.got_subcommand("sweep")) {
            if (which != "ly") throw input_error("sweep supports --which ly only");
            const std::vector<double> grid = parse_lambda_spec(lambdas_text);
            const SweepResult sweep = sweep_lprime_y(space, grid, cfg);
            if (format.empty() || format == "csv") {
                std::ostringstream csv;
                write_sweep_csv(csv, sweep);
                std::string payload = csv.str();
                if (!payload.empty() && payload.back() == '\n') payload.pop_back();
                target.write(payload, out);
            } else if (format == "json") {
                target.write(to_json(sweep), out);
            } else {
                throw input_error("unknown format '" + format + "'");
            }
            for (const auto& v : sweep.values)
                if (!v.converged) return 3;
            return 0;
        }

        if (app.got_subcommand("check")) {
            const std::vector<double> grid = lambdas_text.empty()
                                                 ? default_lambda_grid()
                                                 : parse_lambda_spec(lambdas_text);
            const CheckReport rep = run_check_suite(space, grid, cfg);
            target.write(to_json(rep), out);
            return exit_code_for(rep);
        }

        if (app.got_subcommand("classify")) {
            const Classification c = classify_space(space, cfg);
            target.write(to_json(c, space.label()), out);
            return c.estimates_converged ? 0 : 3;
        }
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const infeasible_error& e) {
        err << "numerical: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

}  // namespace geomlab
