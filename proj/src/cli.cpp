#include "quartic/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <ostream>
#include <sstream>

#include "quartic/errors.hpp"
#include "quartic/run_config.hpp"
#include "quartic/variational.hpp"

namespace quartic {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(const char* format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, value);
    return buf;
}

std::string energy_str(double e) { return fmt("%.12f", e); }
std::string param_str(double x) { return fmt("%.6f", x); }

std::string state_str(const QuantumNumbers& qn) {
    return "(" + std::to_string(qn.n) + "," + std::to_string(qn.p) + ")";
}

std::string model_str(int alpha, bool freeze_b) {
    return "alpha=" + std::to_string(alpha) + (freeze_b ? ", b=0" : ", b free");
}

void write_atomically(const std::string& path, const std::string& contents) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << contents;
        if (!f.flush()) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot read config file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Model {
    int alpha;
    bool freeze_b;
};

// One state solved as the top of its parity ladder.
SolveReport solve_state(const RunConfig& cfg, const ReducedPotential& pot, const Model& model) {
    TrialParams init = cfg.init ? *cfg.init : default_initial_params(pot, {0, cfg.state.p}, model.alpha);
    init.alpha = model.alpha;
    if (model.freeze_b) init.b = 0.0;
    OptimizeOptions options;
    options.quadrature = cfg.quadrature_spec();
    options.freeze_b = model.freeze_b;
    return solve_ladder(pot, cfg.state.p, cfg.state.n, init, options).back();
}

ordered_json report_json(const SolveReport& r, bool double_well) {
    ordered_json params;
    params["A"] = r.params.A;
    params["B"] = r.params.B;
    if (double_well) {
        params["a"] = r.params.a;
        params["b"] = r.params.b;
        params["alpha"] = r.params.alpha;
    }
    ordered_json j;
    j["state"] = {{"n", r.qn.n}, {"p", r.qn.p}};
    j["energy"] = r.energy;
    j["params"] = params;
    j["polynomial"] = r.polynomial.coefficients();
    j["quadrature_error"] = r.quadrature_error;
    j["iterations"] = r.iterations;
    j["evaluations"] = r.evaluations;
    j["restarts"] = r.restarts;
    j["converged"] = r.converged;
    return j;
}

struct Outcome {
    ordered_json results;
    std::string text;
    bool converged = true;
};

Outcome cmd_variational(const RunConfig& cfg) {
    const ReducedPotential pot = cfg.reduced_potential();
    const bool dw = family_for(pot) == TrialFamily::DoubleWell;
    const SolveReport r = solve_state(cfg, pot, {cfg.alpha, cfg.freeze_b});

    std::ostringstream t;
    t << "potential   " << cfg.potential << "\n";
    t << "state       " << state_str(r.qn) << "\n";
    if (dw) t << "model       " << model_str(cfg.alpha, cfg.freeze_b) << "\n";
    t << "energy      " << energy_str(r.energy) << "\n";
    t << "A           " << param_str(r.params.A) << "\n";
    t << "B           " << param_str(r.params.B) << "\n";
    if (dw) {
        t << "a           " << param_str(r.params.a) << "\n";
        t << "b           " << param_str(r.params.b) << "\n";
    }
    t << "quad error  " << fmt("%.2e", r.quadrature_error) << "\n";
    t << "iterations  " << r.iterations << " (" << r.evaluations << " evaluations, " << r.restarts << " restarts)\n";
    t << "status      " << (r.converged ? "converged" : "NOT CONVERGED") << "\n";
    return {report_json(r, dw), t.str(), r.converged};
}

Outcome cmd_mesh(const RunConfig& cfg) {
    MeshSpec spec = cfg.mesh_spec();
    const MeshSolution sol = solve_mesh(cfg.reduced_potential(), spec);

    ordered_json states = ordered_json::array();
    std::ostringstream t;
    for (std::size_t k = 0; k < sol.states.size(); ++k) {
        states.push_back({{"index", k}, {"energy", sol.states[k].energy}, {"parity", sol.states[k].parity}});
        t << energy_str(sol.states[k].energy) << "\n";
    }
    ordered_json j;
    j["nodes"] = sol.nodes;
    j["half_width"] = spec.half_width;
    j["certificate"] = sol.certificate;
    j["states"] = states;
    return {j, t.str(), true};
}

// Mesh solve deep enough to contain the requested state.
MeshSolution reference_for(const RunConfig& cfg, const ReducedPotential& pot) {
    MeshSpec spec = cfg.mesh_spec();
    spec.count = std::max(spec.count, cfg.state.excitation() + 1);
    return solve_mesh(pot, spec);
}

Outcome cmd_compare(const RunConfig& cfg) {
    const ReducedPotential pot = cfg.reduced_potential();
    const bool dw = family_for(pot) == TrialFamily::DoubleWell;
    const MeshSolution sol = reference_for(cfg, pot);
    const MeshState& exact = sol.states[static_cast<std::size_t>(cfg.state.excitation())];
    const auto grid = uniform_grid(cfg.window_min, cfg.window_max, cfg.window_points);
    const GridFunction ref = sample_mesh(exact, grid);

    std::vector<Model> models{{cfg.alpha, cfg.freeze_b}};
    if (cfg.with_simplified && dw && !(cfg.alpha == 0 && cfg.freeze_b)) models.push_back({0, true});

    Outcome o;
    ordered_json rows = ordered_json::array();
    std::ostringstream t;
    t << "potential " << cfg.potential << "  state " << state_str(cfg.state) << "\n";
    t << "model             E_var             E_mesh            dE         sup_dev    barrier_dev\n";
    for (const Model& m : models) {
        const SolveReport r = solve_state(cfg, pot, m);
        const GridFunction var = sample_trial(r.trial(), grid, cfg.quadrature_spec());
        const WaveComparison cmp = compare_wavefunctions(var, ref);
        ordered_json row;
        row["model"] = {{"alpha", m.alpha}, {"freeze_b", m.freeze_b}};
        row["energy"] = r.energy;
        row["mesh_energy"] = exact.energy;
        row["delta"] = r.energy - exact.energy;
        row["sup_deviation"] = cmp.sup_deviation;
        std::string barrier = "-";
        if (dw) {
            const double dev = under_barrier_accuracy(var, ref);
            row["under_barrier_deviation"] = dev;
            barrier = fmt("%.3e", dev);
        } else {
            row["under_barrier_deviation"] = nullptr;
        }
        row["converged"] = r.converged;
        rows.push_back(row);
        o.converged = o.converged && r.converged;

        char line[256];
        std::snprintf(line, sizeof line, "%-16s  %s  %s  %+.3e  %.3e  %s%s\n", model_str(m.alpha, m.freeze_b).c_str(),
                      energy_str(r.energy).c_str(), energy_str(exact.energy).c_str(), r.energy - exact.energy,
                      cmp.sup_deviation, barrier.c_str(), r.converged ? "" : "  (not converged)");
        t << line;
    }
    o.results["mesh"] = {{"nodes", sol.nodes}, {"certificate", sol.certificate}};
    o.results["models"] = rows;
    o.text = t.str();
    return o;
}

Outcome cmd_wavefunction(const RunConfig& cfg, std::string& samples) {
    const ReducedPotential pot = cfg.reduced_potential();
    family_for(pot);
    const MeshSolution sol = reference_for(cfg, pot);
    const MeshState& exact = sol.states[static_cast<std::size_t>(cfg.state.excitation())];
    const SolveReport r = solve_state(cfg, pot, {cfg.alpha, cfg.freeze_b});
    const auto grid = uniform_grid(cfg.window_min, cfg.window_max, cfg.window_points);
    const GridFunction var = sample_trial(r.trial(), grid, cfg.quadrature_spec());
    const GridFunction ref = sample_mesh(exact, grid);
    const WaveComparison cmp = compare_wavefunctions(var, ref);

    std::ostringstream s;
    s << "u psi_var psi_mesh V\n";
    char line[160];
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::snprintf(line, sizeof line, "%.6f %.15e %.15e %.15e\n", grid[i], var.values[i],
                      cmp.aligned_sign * ref.values[i], pot(grid[i]));
        s << line;
    }
    samples = s.str();

    Outcome o;
    o.results["variational"] = report_json(r, family_for(pot) == TrialFamily::DoubleWell);
    o.results["mesh_energy"] = exact.energy;
    o.results["points"] = grid.size();
    o.results["sup_deviation"] = cmp.sup_deviation;
    o.converged = r.converged;
    return o;
}

// Fans out the four model switches (alpha in {0,1}, b free/frozen).
Outcome cmd_scan(const RunConfig& cfg) {
    const ReducedPotential pot = cfg.reduced_potential();
    const bool dw = family_for(pot) == TrialFamily::DoubleWell;
    std::vector<Model> models{{1, false}};
    if (dw) models = {{1, false}, {1, true}, {0, false}, {0, true}};

    std::vector<std::future<SolveReport>> jobs;
    for (const Model& m : models)
        jobs.push_back(std::async(std::launch::async, [&cfg, &pot, m] { return solve_state(cfg, pot, m); }));

    Outcome o;
    ordered_json rows = ordered_json::array();
    std::ostringstream t;
    t << "potential " << cfg.potential << "  state " << state_str(cfg.state) << "\n";
    for (std::size_t i = 0; i < models.size(); ++i) {
        const SolveReport r = jobs[i].get();
        ordered_json row;
        row["model"] = {{"alpha", models[i].alpha}, {"freeze_b", models[i].freeze_b}};
        row["result"] = report_json(r, dw);
        rows.push_back(row);
        o.converged = o.converged && r.converged;
        char line[128];
        std::snprintf(line, sizeof line, "%-16s  %s%s\n", model_str(models[i].alpha, models[i].freeze_b).c_str(),
                      energy_str(r.energy).c_str(), r.converged ? "" : "  (not converged)");
        t << line;
    }
    o.results["models"] = rows;
    o.text = t.str();
    return o;
}

// Flags of one subcommand; options left null are not offered there.
struct Flags {
    std::string config, potential, state, out, samples, format;
    std::vector<double> init;
    int alpha = 1, mesh_n = 128, count = 2, points = 2001;
    double quad_tol = 1e-12, window_min = -1.5, window_max = 2.5;
    bool freeze_b = false, emit = false, with_simplified = false;

    CLI::Option *o_potential = nullptr, *o_state = nullptr, *o_alpha = nullptr, *o_freeze = nullptr,
                *o_mesh_n = nullptr, *o_quad = nullptr, *o_out = nullptr, *o_format = nullptr, *o_init = nullptr,
                *o_count = nullptr, *o_min = nullptr, *o_max = nullptr, *o_points = nullptr, *o_samples = nullptr,
                *o_simplified = nullptr, *o_config = nullptr;

    void apply(RunConfig& c) const {
        auto set = [](CLI::Option* opt) { return opt != nullptr && opt->count() > 0; };
        if (set(o_potential)) c.potential = potential;
        if (set(o_state)) c.state = parse_state(state);
        if (set(o_alpha)) c.alpha = alpha;
        if (set(o_freeze)) c.freeze_b = freeze_b;
        if (set(o_mesh_n)) c.mesh_nodes = mesh_n;
        if (set(o_quad)) c.quad_tol = quad_tol;
        if (set(o_out)) c.out = out;
        if (set(o_format)) c.format = format;
        if (set(o_init)) c.init = TrialParams{init[0], init[1], init[2], init[3], c.alpha};
        if (set(o_count)) c.mesh_count = count;
        if (set(o_min)) c.window_min = window_min;
        if (set(o_max)) c.window_max = window_max;
        if (set(o_points)) c.window_points = points;
        if (set(o_simplified)) c.with_simplified = with_simplified;
        if (set(o_samples)) c.samples = samples;
        if (c.init) c.init->alpha = c.alpha;
    }
};

void add_common(CLI::App* sub, Flags& f, bool variational) {
    f.o_config = sub->add_option("--config", f.config, "Load a RunConfig JSON file; explicit flags override it");
    sub->add_flag("--emit-config", f.emit, "Print the resolved RunConfig as JSON and exit");
    f.o_potential = sub->add_option("--potential", f.potential, "single-well | double-well | harmonic-test");
    f.o_state = sub->add_option("--state", f.state, "Quantum numbers n,p");
    f.o_mesh_n = sub->add_option("--mesh-N", f.mesh_n, "Mesh nodes");
    f.o_out = sub->add_option("--out", f.out, "Write the JSON run report to this file");
    f.o_format = sub->add_option("--format", f.format, "stdout format: text | json");
    if (!variational) return;
    f.o_alpha = sub->add_option("--alpha", f.alpha, "Use the alpha=1 (full) or alpha=0 prefactor");
    f.o_freeze = sub->add_flag("--freeze-b", f.freeze_b, "Fix b = 0 during the minimization");
    f.o_quad = sub->add_option("--quad-tol", f.quad_tol, "Relative quadrature tolerance");
    f.o_init = sub->add_option("--init", f.init, "Starting parameters A B a b")->expected(4);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eigenstates of the quartic single- and double-well oscillators"};
    app.require_subcommand(1);

    std::map<std::string, Flags> flags;
    const std::pair<const char*, const char*> commands[] = {
        {"variational", "Minimize the Rayleigh quotient for one state"},
        {"mesh", "Reference spectrum from the sinc mesh"},
        {"compare", "Variational vs mesh energies and wavefunctions"},
        {"wavefunction", "Write psi_var, psi_mesh and V on a uniform grid"},
        {"scan", "Solve one state under every model switch concurrently"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        Flags& f = flags[name];
        add_common(sub, f, std::string(name) != "mesh");
        if (std::string(name) == "mesh") f.o_count = sub->add_option("-k,--count", f.count, "Number of eigenvalues");
        if (std::string(name) == "compare")
            f.o_simplified = sub->add_flag("--with-simplified", f.with_simplified, "Also run the alpha=0, b=0 model");
        if (std::string(name) == "compare" || std::string(name) == "wavefunction") {
            f.o_min = sub->add_option("--u-min", f.window_min, "Sampling window start");
            f.o_max = sub->add_option("--u-max", f.window_max, "Sampling window end");
            f.o_points = sub->add_option("--points", f.points, "Sampling points");
        }
        if (std::string(name) == "wavefunction")
            f.o_samples = sub->add_option("--samples", f.samples, "Write the sample columns here instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ExitSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const Flags& f = flags.at(command);

    RunConfig cfg;
    try {
        if (f.o_config->count() > 0) cfg = RunConfig::from_json(read_file(f.config));
        cfg.command = command;
        f.apply(cfg);
        cfg.validate();
        if (command != "mesh") family_for(cfg.reduced_potential());
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return ExitUsage;
    }

    if (f.emit) {
        out << cfg.to_json();
        return ExitSuccess;
    }

    Outcome outcome;
    std::string samples;
    try {
        if (command == "variational")
            outcome = cmd_variational(cfg);
        else if (command == "mesh")
            outcome = cmd_mesh(cfg);
        else if (command == "compare")
            outcome = cmd_compare(cfg);
        else if (command == "wavefunction")
            outcome = cmd_wavefunction(cfg, samples);
        else
            outcome = cmd_scan(cfg);
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return ExitNonConvergence;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return ExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ExitNonConvergence;
    }

    ordered_json report;
    report["command"] = command;
    report["config"] = ordered_json::parse(cfg.to_json());
    report["results"] = outcome.results;
    report["converged"] = outcome.converged;
    const std::string report_text = report.dump(2) + "\n";

    try {
        if (!cfg.out.empty()) write_atomically(cfg.out, report_text);
        if (command == "wavefunction" && !cfg.samples.empty()) write_atomically(cfg.samples, samples);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ExitUsage;
    }

    if (command == "wavefunction" && cfg.samples.empty())
        out << samples;
    else if (cfg.format == "json")
        out << report_text;
    else
        out << outcome.text;

    if (!outcome.converged) {
        err << "error: the minimization did not converge\n";
        return ExitNonConvergence;
    }
    return ExitSuccess;
}

}  // namespace quartic
