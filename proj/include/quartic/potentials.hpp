#pragma once

#include <optional>
#include <string>

namespace quartic {

enum class PotentialKind {
    SingleWellQuartic,        // u^2 + u^4
    DoubleWell,               // u^2 (1 - u)^2
    GeneralSymmetricQuartic,  // u^2 + a u^3 + u^4
    HarmonicTest,             // u^2, exact spectrum 2n+1; used to validate solvers
};

/// Reduced (g = 1) member of the quartic family, written in the classical
/// coordinate u = g x.
class ReducedPotential {
public:
    static ReducedPotential single_well();
    static ReducedPotential double_well();
    static ReducedPotential harmonic_test();
    /// u^2 + a u^3 + u^4. a = 0 and a = -2 collapse onto the named kinds.
    static ReducedPotential general(double a);

    PotentialKind kind() const noexcept { return kind_; }
    double cubic_coefficient() const noexcept { return a_; }

    /// Point of reflection symmetry; empty when the cubic term breaks it.
    std::optional<double> symmetry_center() const noexcept;

    /// Center used for quadrature windows and mesh boxes: the symmetry
    /// center if there is one, otherwise the origin.
    double reference_center() const noexcept { return symmetry_center().value_or(0.0); }

    double operator()(double u) const;

    std::string name() const;

private:
    ReducedPotential(PotentialKind kind, double a) : kind_(kind), a_(a) {}

    PotentialKind kind_;
    double a_;
};

/// Result of rescaling a physical problem to the classical coordinate.
/// E_physical = energy_scale * eps, eps an eigenvalue of
/// -(hbar_eff)^2 d^2/du^2 + V(u).
struct Reduction {
    ReducedPotential potential;
    double hbar_eff;
    double energy_scale;
};

/// V(x) = x^2 + a g x^3 + g^2 x^4 with Hamiltonian -hbar^2 d^2/dx^2 + V(x).
class PhysicalPotential {
public:
    PhysicalPotential(double g, double hbar, double a);

    double g() const noexcept { return g_; }
    double hbar() const noexcept { return hbar_; }
    double a() const noexcept { return a_; }

    double operator()(double x) const;

    Reduction reduce() const;

private:
    double g_;
    double hbar_;
    double a_;
};

/// Free-function form of ReducedPotential::operator().
double eval_reduced(const ReducedPotential& pot, double u);

/// Free-function form of PhysicalPotential::reduce().
Reduction reduce(const PhysicalPotential& phys);

}  // namespace quartic
