#include "quartic/potentials.hpp"

#include <cmath>
#include <sstream>

#include "quartic/errors.hpp"

namespace quartic {

ReducedPotential ReducedPotential::single_well() { return {PotentialKind::SingleWellQuartic, 0.0}; }
ReducedPotential ReducedPotential::double_well() { return {PotentialKind::DoubleWell, -2.0}; }
ReducedPotential ReducedPotential::harmonic_test() { return {PotentialKind::HarmonicTest, 0.0}; }

ReducedPotential ReducedPotential::general(double a) {
    if (!std::isfinite(a)) throw DomainError("cubic coefficient must be finite");
    if (a == 0.0) return single_well();
    if (a == -2.0) return double_well();
    return {PotentialKind::GeneralSymmetricQuartic, a};
}

std::optional<double> ReducedPotential::symmetry_center() const noexcept {
    switch (kind_) {
        case PotentialKind::SingleWellQuartic:
        case PotentialKind::HarmonicTest:
            return 0.0;
        case PotentialKind::DoubleWell:
            return 0.5;
        case PotentialKind::GeneralSymmetricQuartic:
            // u^2 (1 + u)^2 mirrors the double well about -1/2.
            if (a_ == 2.0) return -0.5;
            return std::nullopt;
    }
    return std::nullopt;
}

double ReducedPotential::operator()(double u) const {
    if (!std::isfinite(u)) throw DomainError("potential evaluated at non-finite u");
    const double u2 = u * u;
    switch (kind_) {
        case PotentialKind::SingleWellQuartic:
            return u2 + u2 * u2;
        case PotentialKind::DoubleWell: {
            // written as a product so V(1/2 + s) and V(1/2 - s) round identically
            const double s = u - 0.5;
            const double w = 0.25 - s * s;
            return w * w;
        }
        case PotentialKind::HarmonicTest:
            return u2;
        case PotentialKind::GeneralSymmetricQuartic:
            return u2 * (1.0 + u * (a_ + u));
    }
    return 0.0;
}

std::string ReducedPotential::name() const {
    switch (kind_) {
        case PotentialKind::SingleWellQuartic: return "single-well";
        case PotentialKind::DoubleWell: return "double-well";
        case PotentialKind::HarmonicTest: return "harmonic-test";
        case PotentialKind::GeneralSymmetricQuartic: {
            std::ostringstream os;
            os << "quartic(a=" << a_ << ")";
            return os.str();
        }
    }
    return "unknown";
}

PhysicalPotential::PhysicalPotential(double g, double hbar, double a) : g_(g), hbar_(hbar), a_(a) {
    if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("coupling g must be positive");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("hbar must be positive");
    if (!std::isfinite(a)) throw DomainError("cubic parameter must be finite");
}

double PhysicalPotential::operator()(double x) const {
    if (!std::isfinite(x)) throw DomainError("potential evaluated at non-finite x");
    const double gx = g_ * x;
    return x * x * (1.0 + gx * (a_ + gx));
}

Reduction PhysicalPotential::reduce() const {
    return {ReducedPotential::general(a_), hbar_ * g_ * g_, 1.0 / (g_ * g_)};
}

double eval_reduced(const ReducedPotential& pot, double u) { return pot(u); }

Reduction reduce(const PhysicalPotential& phys) { return phys.reduce(); }

}  // namespace quartic
