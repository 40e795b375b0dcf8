#include "quartic/run_config.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "quartic/errors.hpp"

namespace quartic {

using ordered_json = nlohmann::ordered_json;

ReducedPotential potential_from_name(const std::string& name) {
    if (name == "double-well") return ReducedPotential::double_well();
    if (name == "single-well") return ReducedPotential::single_well();
    if (name == "harmonic-test") return ReducedPotential::harmonic_test();
    throw DomainError("unknown potential '" + name + "' (single-well | double-well | harmonic-test)");
}

QuantumNumbers parse_state(const std::string& text) {
    std::istringstream in(text);
    QuantumNumbers qn;
    char comma = 0;
    if (!(in >> qn.n >> comma >> qn.p) || comma != ',' || !(in >> std::ws).eof())
        throw DomainError("state must be given as n,p (got '" + text + "')");
    qn.validate();
    return qn;
}

void RunConfig::validate() const {
    static const char* commands[] = {"variational", "mesh", "compare", "wavefunction", "scan"};
    if (std::find(std::begin(commands), std::end(commands), command) == std::end(commands))
        throw DomainError("unknown command '" + command + "'");
    potential_from_name(potential);
    state.validate();
    if (alpha != 0 && alpha != 1) throw DomainError("alpha must be 0 or 1");
    if (init) {
        if (potential == "single-well")
            init->validate_single();
        else
            init->validate_double();
    }
    if (mesh_count < 1) throw DomainError("mesh state count must be at least 1");
    mesh_spec().validate();
    if (!(quad_tol > 0.0) || quad_tol >= 1.0) throw DomainError("quadrature tolerance must lie in (0, 1)");
    if (!(window_max > window_min) || window_points < 2) throw DomainError("invalid sampling window");
    if (format != "text" && format != "json") throw DomainError("format must be text or json");
}

ReducedPotential RunConfig::reduced_potential() const { return potential_from_name(potential); }

MeshSpec RunConfig::mesh_spec() const {
    MeshSpec spec;
    spec.nodes = mesh_nodes;
    spec.half_width = mesh_half_width;
    spec.count = mesh_count;
    return spec;
}

QuadratureSpec RunConfig::quadrature_spec() const {
    QuadratureSpec spec;
    spec.rel_tol = quad_tol;
    return spec;
}

std::string RunConfig::to_json() const {
    ordered_json j;
    j["command"] = command;
    j["potential"] = potential;
    j["state"] = {{"n", state.n}, {"p", state.p}};
    j["alpha"] = alpha;
    j["freeze_b"] = freeze_b;
    if (init)
        j["init"] = {{"A", init->A}, {"B", init->B}, {"a", init->a}, {"b", init->b}};
    else
        j["init"] = nullptr;
    j["mesh"] = {{"nodes", mesh_nodes}, {"half_width", mesh_half_width}, {"count", mesh_count}};
    j["quadrature"] = {{"rel_tol", quad_tol}};
    j["window"] = {{"min", window_min}, {"max", window_max}, {"points", window_points}};
    j["with_simplified"] = with_simplified;
    j["out"] = out;
    j["samples"] = samples;
    j["format"] = format;
    return j.dump(2) + "\n";
}

RunConfig RunConfig::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("config is not valid JSON: ") + e.what());
    }
    RunConfig c;
    try {
        c.command = j.value("command", c.command);
        c.potential = j.value("potential", c.potential);
        if (j.contains("state")) {
            c.state.n = j["state"].at("n").get<int>();
            c.state.p = j["state"].at("p").get<int>();
        }
        c.alpha = j.value("alpha", c.alpha);
        c.freeze_b = j.value("freeze_b", c.freeze_b);
        if (j.contains("init") && !j["init"].is_null()) {
            const auto& i = j["init"];
            c.init = TrialParams{i.at("A").get<double>(), i.at("B").get<double>(), i.value("a", 0.0),
                                 i.value("b", 0.0), c.alpha};
        }
        if (j.contains("mesh")) {
            const auto& m = j["mesh"];
            c.mesh_nodes = m.value("nodes", c.mesh_nodes);
            c.mesh_half_width = m.value("half_width", c.mesh_half_width);
            c.mesh_count = m.value("count", c.mesh_count);
        }
        if (j.contains("quadrature")) c.quad_tol = j["quadrature"].value("rel_tol", c.quad_tol);
        if (j.contains("window")) {
            const auto& w = j["window"];
            c.window_min = w.value("min", c.window_min);
            c.window_max = w.value("max", c.window_max);
            c.window_points = w.value("points", c.window_points);
        }
        c.with_simplified = j.value("with_simplified", c.with_simplified);
        c.out = j.value("out", c.out);
        c.samples = j.value("samples", c.samples);
        c.format = j.value("format", c.format);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed config field: ") + e.what());
    }
    return c;
}

}  // namespace quartic
