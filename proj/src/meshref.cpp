#include "quartic/meshref.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "quartic/errors.hpp"

namespace quartic {

void MeshSpec::validate() const {
    if (count < 1) throw DomainError("mesh: at least one eigenpair must be requested");
    if (nodes < 2 * count) throw DomainError("mesh: node count must be at least twice the requested states");
    if (!(half_width > 0.0) || !std::isfinite(half_width)) throw DomainError("mesh: half width must be positive");
    if (!(hbar_eff > 0.0) || !std::isfinite(hbar_eff)) throw DomainError("mesh: hbar_eff must be positive");
}

MeshProblem MeshProblem::from(const ReducedPotential& pot) {
    const auto center = pot.symmetry_center();
    return {[pot](double u) { return pot(u); }, pot.reference_center(), center.has_value(), pot.name()};
}

MeshProblem MeshProblem::from(const PhysicalPotential& pot) {
    const auto reduced_center = pot.reduce().potential.symmetry_center();
    const double center = reduced_center.value_or(0.0) / pot.g();
    return {[pot](double x) { return pot(x); }, center, reduced_center.has_value(), "physical"};
}

SincExpansion::SincExpansion(double first_node, double step, std::vector<double> coefficients)
    : first_(first_node), step_(step), coeffs_(std::move(coefficients)) {}

double SincExpansion::value(double u) const {
    const double scale = 1.0 / std::sqrt(step_);
    double sum = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const double x = (u - (first_ + step_ * static_cast<double>(i))) / step_;
        const double s = std::abs(x) < 1e-12 ? 1.0 : std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
        sum += coeffs_[i] * s;
    }
    return sum * scale;
}

double SincExpansion::derivative(double u) const {
    const double scale = 1.0 / (std::sqrt(step_) * step_);
    double sum = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const double x = (u - (first_ + step_ * static_cast<double>(i))) / step_;
        if (std::abs(x) < 1e-8) continue;  // sinc'(0) = 0, error O(x)
        const double px = std::numbers::pi * x;
        sum += coeffs_[i] * (std::cos(px) - std::sin(px) / px) / x;
    }
    return sum * scale;
}

namespace {

void orient(MeshState& state, const MeshProblem& problem) {
    const auto& c = state.expansion.coefficients();
    const std::size_t n = c.size();
    double sign = 1.0;
    if (problem.symmetric) {
        double mirror = 0.0;
        for (std::size_t i = 0; i < n; ++i) mirror += c[i] * c[n - 1 - i];
        state.parity = mirror >= 0.0 ? 0 : 1;
        const double probe = state.parity == 0 ? state.expansion.value(problem.center)
                                               : state.expansion.derivative(problem.center);
        sign = probe < 0.0 ? -1.0 : 1.0;
    } else {
        state.parity = -1;
        const auto it = std::max_element(c.begin(), c.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
        sign = *it < 0.0 ? -1.0 : 1.0;
    }
    if (sign < 0.0) {
        std::vector<double> flipped(c.begin(), c.end());
        for (double& x : flipped) x = -x;
        for (double& x : state.grid.values) x = -x;
        state.expansion = SincExpansion(state.expansion.first_node(), state.expansion.step(), std::move(flipped));
    }
}

}  // namespace

MeshSolution solve_mesh_level(const MeshProblem& problem, const MeshSpec& spec) {
    spec.validate();
    if (!problem.potential) throw DomainError("mesh: no potential supplied");
    const int n = spec.nodes;
    const double h = 2.0 * spec.half_width / (n + 1);
    const double first = problem.center - spec.half_width + h;
    const double kin = spec.hbar_eff * spec.hbar_eff / (h * h);
    const double pi2 = std::numbers::pi * std::numbers::pi;

    Eigen::MatrixXd hamiltonian(n, n);
    std::vector<double> nodes(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        nodes[static_cast<std::size_t>(i)] = first + h * i;
        for (int j = 0; j < i; ++j) {
            const int d = i - j;
            const double t = kin * ((d % 2 == 0) ? 2.0 : -2.0) / (static_cast<double>(d) * d);
            hamiltonian(i, j) = t;
            hamiltonian(j, i) = t;
        }
        hamiltonian(i, i) = kin * pi2 / 3.0 + problem.potential(nodes[static_cast<std::size_t>(i)]);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
    if (solver.info() != Eigen::Success) throw ConvergenceError("mesh: eigensolver failed", 0.0, 0.0);

    MeshSolution out;
    out.nodes = n;
    const double inv_sqrt_h = 1.0 / std::sqrt(h);
    for (int k = 0; k < spec.count; ++k) {
        MeshState state;
        state.energy = solver.eigenvalues()(k);
        std::vector<double> coeffs(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) coeffs[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, k);
        state.grid.abscissas = nodes;
        state.grid.values.resize(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) state.grid.values[i] = coeffs[i] * inv_sqrt_h;
        state.grid.normalization = Normalization::UnitL2;
        state.expansion = SincExpansion(first, h, std::move(coeffs));
        orient(state, problem);
        out.states.push_back(std::move(state));
    }
    return out;
}

MeshSolution solve_mesh(const MeshProblem& problem, const MeshSpec& spec) {
    MeshSolution coarse = solve_mesh_level(problem, spec);
    MeshSpec doubled = spec;
    doubled.nodes = 2 * spec.nodes;
    const MeshSolution fine = solve_mesh_level(problem, doubled);
    double worst = 0.0;
    std::size_t worst_index = 0;
    for (std::size_t k = 0; k < coarse.states.size(); ++k) {
        const double delta = std::abs(coarse.states[k].energy - fine.states[k].energy);
        coarse.refined_energies.push_back(fine.states[k].energy);
        if (delta > worst) {
            worst = delta;
            worst_index = k;
        }
    }
    coarse.certificate = worst;
    if (worst > spec.certificate_tol)
        throw ConvergenceError("mesh: energies moved by more than the tolerance under node doubling",
                               coarse.states[worst_index].energy, fine.states[worst_index].energy);
    return coarse;
}

MeshSolution solve_mesh(const ReducedPotential& pot, const MeshSpec& spec) {
    return solve_mesh(MeshProblem::from(pot), spec);
}

std::vector<ConvergenceRow> convergence_study(const ReducedPotential& pot, const MeshSpec& spec, int levels) {
    if (levels < 2) throw DomainError("convergence study needs at least two levels");
    const MeshProblem problem = MeshProblem::from(pot);
    std::vector<ConvergenceRow> rows;
    MeshSpec level = spec;
    for (int l = 0; l < levels; ++l) {
        const MeshSolution sol = solve_mesh_level(problem, level);
        ConvergenceRow row{level.nodes, {}, 0.0};
        for (const auto& s : sol.states) row.energies.push_back(s.energy);
        if (!rows.empty())
            for (std::size_t k = 0; k < row.energies.size(); ++k)
                row.delta = std::max(row.delta, std::abs(row.energies[k] - rows.back().energies[k]));
        rows.push_back(std::move(row));
        level.nodes *= 2;
    }
    return rows;
}

}  // namespace quartic
