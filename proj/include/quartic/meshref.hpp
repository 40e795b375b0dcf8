#pragma once

#include <functional>
#include <string>
#include <vector>

#include "quartic/grid_function.hpp"
#include "quartic/potentials.hpp"

namespace quartic {

/// Uniform sinc (Lagrange-Whittaker) mesh on the box
/// [center - half_width, center + half_width]: nodes are the interior
/// points u_i = center - half_width + (i + 1) h, h = 2 half_width / (nodes + 1).
/// The kinetic matrix is exact on the sinc basis; the potential is diagonal.
struct MeshSpec {
    int nodes = 128;
    double half_width = 7.0;
    double hbar_eff = 1.0;
    int count = 2;
    double certificate_tol = 1e-11;

    void validate() const;
};

/// Potential handed to the mesh solver, with the point the box is centered on.
struct MeshProblem {
    std::function<double(double)> potential;
    double center = 0.0;
    bool symmetric = false;  // V(center + s) == V(center - s)
    std::string label;

    static MeshProblem from(const ReducedPotential& pot);
    static MeshProblem from(const PhysicalPotential& pot);
};

/// psi(u) = sum_i c_i / sqrt(h) sinc((u - u_i) / h)
class SincExpansion {
public:
    SincExpansion() = default;
    SincExpansion(double first_node, double step, std::vector<double> coefficients);

    double value(double u) const;
    double derivative(double u) const;

    double first_node() const noexcept { return first_; }
    double step() const noexcept { return step_; }
    const std::vector<double>& coefficients() const noexcept { return coeffs_; }

private:
    double first_ = 0.0;
    double step_ = 1.0;
    std::vector<double> coeffs_;
};

struct MeshState {
    double energy = 0.0;
    int parity = -1;  // 0 even, 1 odd about the box center, -1 if the problem is not symmetric
    GridFunction grid;        // values at the mesh nodes, unit L2
    SincExpansion expansion;  // continuous interpolant of the same function
};

struct MeshSolution {
    std::vector<MeshState> states;
    int nodes = 0;
    std::vector<double> refined_energies;  // same states on 2N nodes
    double certificate = 0.0;              // max |E(N) - E(2N)|
};

/// Lowest spec.count eigenpairs on a single mesh, no certificate.
MeshSolution solve_mesh_level(const MeshProblem& problem, const MeshSpec& spec);

/// Eigenpairs on spec.nodes, certified by a re-solve on twice the nodes.
/// Throws ConvergenceError when the two levels differ by more than
/// spec.certificate_tol.
MeshSolution solve_mesh(const MeshProblem& problem, const MeshSpec& spec);
MeshSolution solve_mesh(const ReducedPotential& pot, const MeshSpec& spec);

struct ConvergenceRow {
    int nodes;
    std::vector<double> energies;
    double delta;  // max |E| change from the previous row; 0 for the first
};

/// spec.nodes, 2 spec.nodes, ... over `levels` rows. levels must be >= 2.
std::vector<ConvergenceRow> convergence_study(const ReducedPotential& pot, const MeshSpec& spec, int levels);

}  // namespace quartic
