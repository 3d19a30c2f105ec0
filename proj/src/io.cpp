#include "geomlab/io.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace geomlab {

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

void append_vector(std::string& out, const Vector& v) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_real(v[i]);
    }
    out += ']';
}

void append_config(std::string& out, const EstimatorConfig& cfg) {
    out += "{\"grid_resolution\":" + std::to_string(cfg.grid_resolution);
    out += ",\"refine_rounds\":" + std::to_string(cfg.refine_rounds);
    out += ",\"starts\":" + std::to_string(cfg.starts);
    out += ",\"local_iters\":" + std::to_string(cfg.local_iters);
    out += ",\"seed\":" + std::to_string(cfg.seed);
    out += ",\"tol\":" + format_real(cfg.tol);
    out += '}';
}

void append_estimate(std::string& out, const EstimateResult& r) {
    out += "{\"value\":" + format_real(r.value);
    out += ",\"witness_x\":";
    append_vector(out, r.witness_x);
    out += ",\"witness_y\":";
    append_vector(out, r.witness_y);
    out += ",\"evaluations\":" + std::to_string(r.evaluations);
    out += ",\"converged\":";
    out += r.converged ? "true" : "false";
    out += ",\"last_improvement\":" + format_real(r.last_improvement);
    out += ",\"config\":";
    append_config(out, r.config);
    out += '}';
}

std::string join_coords(const Vector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ';';
        s += format_real(v[i]);
    }
    return s;
}

Vector split_coords(const std::string& s) {
    Vector v;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t next = s.find(';', pos);
        const std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty()) throw input_error("sweep csv: empty coordinate");
        char* end = nullptr;
        v.push_back(std::strtod(tok.c_str(), &end));
        if (end == tok.c_str()) throw input_error("sweep csv: bad coordinate: " + tok);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return v;
}

}  // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
    out << "lambda,value,witness_x,witness_y,evaluations\n";
    for (std::size_t i = 0; i < sweep.lambdas.size(); ++i) {
        const EstimateResult& r = sweep.values[i];
        out << format_real(sweep.lambdas[i]) << ',' << format_real(r.value) << ','
            << join_coords(r.witness_x) << ',' << join_coords(r.witness_y) << ','
            << r.evaluations << '\n';
    }
}

SweepResult read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw input_error("sweep csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "lambda,value,witness_x,witness_y,evaluations")
        throw input_error("sweep csv: unexpected header: " + line);

    SweepResult sweep;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::array<std::string, 5> field;
        std::size_t pos = 0;
        for (int f = 0; f < 5; ++f) {
            const std::size_t next = line.find(',', pos);
            if (f < 4 && next == std::string::npos)
                throw input_error("sweep csv: expected 5 fields: " + line);
            field[static_cast<std::size_t>(f)] =
                line.substr(pos, next == std::string::npos ? next : next - pos);
            pos = next + 1;
        }
        char* end = nullptr;
        sweep.lambdas.push_back(std::strtod(field[0].c_str(), &end));
        EstimateResult r;
        r.value = std::strtod(field[1].c_str(), &end);
        r.witness_x = split_coords(field[2]);
        r.witness_y = split_coords(field[3]);
        r.evaluations = std::strtoll(field[4].c_str(), &end, 10);
        sweep.values.push_back(std::move(r));
    }
    return sweep;
}

std::string to_json(const EstimateResult& r) {
    std::string s;
    append_estimate(s, r);
    return s;
}

std::string to_json(const SweepResult& sweep) {
    std::string s = "{\"lambdas\":[";
    for (std::size_t i = 0; i < sweep.lambdas.size(); ++i) {
        if (i) s += ',';
        s += format_real(sweep.lambdas[i]);
    }
    s += "],\"values\":[";
    for (std::size_t i = 0; i < sweep.values.size(); ++i) {
        if (i) s += ',';
        append_estimate(s, sweep.values[i]);
    }
    s += "]}";
    return s;
}

std::string to_json(const CheckReport& rep) {
    std::string s = "{\"space\":";
    append_escaped(s, rep.space);
    s += ",\"wall_time_seconds\":" + format_real(rep.wall_time_seconds);
    s += ",\"estimates_converged\":";
    s += rep.estimates_converged ? "true" : "false";
    s += ",\"config\":";
    append_config(s, rep.config);
    s += ",\"items\":[";
    for (std::size_t i = 0; i < rep.items.size(); ++i) {
        const CheckItem& it = rep.items[i];
        if (i) s += ',';
        s += "{\"name\":";
        append_escaped(s, it.name);
        s += ",\"status\":";
        append_escaped(s, to_string(it.status));
        s += ",\"lhs\":" + format_real(it.lhs);
        s += ",\"rhs\":" + format_real(it.rhs);
        s += ",\"tol\":" + format_real(it.tol);
        if (it.witness) {
            s += ",\"witness\":{\"x\":";
            append_vector(s, it.witness->x);
            s += ",\"y\":";
            append_vector(s, it.witness->y);
            s += ",\"lambda\":" + format_real(it.witness->lambda);
            s += '}';
        }
        s += ",\"note\":";
        append_escaped(s, it.note);
        s += '}';
    }
    s += "]}";
    return s;
}

std::string to_json(const Classification& c, const std::string& space_label) {
    std::string s = "{\"space\":";
    append_escaped(s, space_label);
    s += ",\"inner_product_like\":";
    s += c.inner_product_like ? "true" : "false";
    s += ",\"uniformly_nonsquare\":";
    s += c.uniformly_nonsquare ? "true" : "false";
    s += ",\"normal_structure_sufficient\":";
    s += c.normal_structure_sufficient ? "true" : "false";
    s += ",\"convexity_probe\":\"";
    s += c.convexity_probe == ConvexityProbe::violated ? "violated" : "convex-consistent";
    s += '"';
    if (c.convexity_probe == ConvexityProbe::violated) {
        s += ",\"violating_lambdas\":[" + format_real(c.violating_lambdas[0]) + ',' +
             format_real(c.violating_lambdas[1]) + ',' + format_real(c.violating_lambdas[2]) +
             ']';
    }
    s += ",\"estimates_converged\":";
    s += c.estimates_converged ? "true" : "false";
    s += ",\"margins\":{\"ly_half\":" + format_real(c.ly_half);
    s += ",\"max_frechet_residual\":" + format_real(c.max_frechet_residual);
    s += ",\"nonsquare_margin\":" + format_real(c.nonsquare_margin);
    s += ",\"normal_structure_margin\":" + format_real(c.normal_structure_margin);
    s += ",\"convexity_excess\":" + format_real(c.convexity_excess);
    s += "}}";
    return s;
}

}  // namespace geomlab
