#pragma once

#include <optional>
#include <string>

#include "quartic/meshref.hpp"
#include "quartic/potentials.hpp"
#include "quartic/quadrature.hpp"
#include "quartic/trialfn.hpp"

namespace quartic {

/// Everything a CLI run depends on. Serializes to JSON with a fixed key
/// order so emitted configs reproduce their reports byte for byte.
struct RunConfig {
    std::string command = "variational";
    std::string potential = "double-well";
    QuantumNumbers state;
    int alpha = 1;
    bool freeze_b = false;
    std::optional<TrialParams> init;  // defaults per potential/parity when empty

    int mesh_nodes = 128;
    double mesh_half_width = 7.0;
    int mesh_count = 2;

    double quad_tol = 1e-12;

    double window_min = -1.5;
    double window_max = 2.5;
    int window_points = 2001;

    bool with_simplified = false;
    std::string out;      // JSON report path, empty for none
    std::string samples;  // wavefunction columns, empty for stdout
    std::string format = "text";  // text | json on stdout

    /// Throws DomainError describing the first invalid field.
    void validate() const;

    ReducedPotential reduced_potential() const;
    MeshSpec mesh_spec() const;
    QuadratureSpec quadrature_spec() const;

    std::string to_json() const;
    static RunConfig from_json(const std::string& text);
};

/// "n,p" -> QuantumNumbers; throws DomainError on malformed input.
QuantumNumbers parse_state(const std::string& text);

ReducedPotential potential_from_name(const std::string& name);

}  // namespace quartic
