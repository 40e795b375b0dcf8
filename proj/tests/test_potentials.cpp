#include <doctest.h>

#include <cmath>
#include <random>

#include "quartic/errors.hpp"
#include "quartic/meshref.hpp"
#include "quartic/potentials.hpp"

using namespace quartic;

TEST_CASE("reduced potentials evaluate exactly") {
    const auto dw = ReducedPotential::double_well();
    const auto sw = ReducedPotential::single_well();
    CHECK(dw(0.5) == 0.0625);
    CHECK(dw(0.0) == 0.0);
    CHECK(dw(1.0) == 0.0);
    CHECK(sw(1.0) == 2.0);
    CHECK(dw(0.3) == doctest::Approx(dw(0.7)).epsilon(1e-15));
    CHECK(eval_reduced(dw, 2.0) == doctest::Approx(4.0));
    CHECK(ReducedPotential::harmonic_test()(3.0) == 9.0);
}

TEST_CASE("symmetry centers") {
    CHECK(ReducedPotential::single_well().symmetry_center() == 0.0);
    CHECK(ReducedPotential::double_well().symmetry_center() == 0.5);
    CHECK(ReducedPotential::general(2.0).symmetry_center() == -0.5);
    CHECK_FALSE(ReducedPotential::general(1.0).symmetry_center().has_value());
    CHECK(ReducedPotential::general(-2.0).kind() == PotentialKind::DoubleWell);
    CHECK(ReducedPotential::general(0.0).kind() == PotentialKind::SingleWellQuartic);
    // cubic family agrees with the closed forms
    const auto cubic = ReducedPotential::general(0.7);
    CHECK(cubic(1.3) == doctest::Approx(1.69 + 0.7 * 2.197 + 2.8561).epsilon(1e-14));
}

TEST_CASE("non-finite coordinates are rejected") {
    CHECK_THROWS_AS(ReducedPotential::double_well()(NAN), DomainError);
    CHECK_THROWS_AS(ReducedPotential::single_well()(INFINITY), DomainError);
    CHECK_THROWS_AS(PhysicalPotential(1.0, 1.0, 0.0)(NAN), DomainError);
}

TEST_CASE("reduce maps (g, hbar) onto hbar g^2 and 1/g^2") {
    auto r = reduce(PhysicalPotential(1.0, 1.0, -2.0));
    CHECK(r.potential.kind() == PotentialKind::DoubleWell);
    CHECK(r.hbar_eff == 1.0);
    CHECK(r.energy_scale == 1.0);

    r = PhysicalPotential(2.0, 1.0, 0.0).reduce();
    CHECK(r.potential.kind() == PotentialKind::SingleWellQuartic);
    CHECK(r.hbar_eff == 4.0);
    CHECK(r.energy_scale == 0.25);

    r = PhysicalPotential(0.5, 2.0, -2.0).reduce();
    CHECK(r.hbar_eff == 0.5);
    CHECK(r.energy_scale == 4.0);

    CHECK_THROWS_AS(PhysicalPotential(0.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(PhysicalPotential(-1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(PhysicalPotential(1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("physical potential is V(u)/g^2 at u = g x") {
    const PhysicalPotential phys(0.8, 1.0, -2.0);
    const auto red = phys.reduce();
    for (double x : {-1.0, 0.2, 0.625, 3.0})
        CHECK(phys(x) == doctest::Approx(red.potential(0.8 * x) / 0.64).epsilon(1e-14));
}

TEST_CASE("reflection symmetry about the center (10^6 samples)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.0, 10.0);
    for (const auto& pot : {ReducedPotential::single_well(), ReducedPotential::double_well()}) {
        const double c = *pot.symmetry_center();
        double worst = 0.0;
        for (int i = 0; i < 1000000; ++i) {
            const double s = dist(rng);
            const double plus = pot(c + s), minus = pot(c - s);
            worst = std::max(worst, std::abs(plus - minus) / std::max(1.0, plus));
        }
        CHECK(worst <= 1e-14);
    }
}

TEST_CASE("positivity on a sampled grid") {
    for (const auto& pot : {ReducedPotential::single_well(), ReducedPotential::double_well()})
        for (int i = -2000; i <= 2000; ++i) CHECK(pot(i * 0.005) >= 0.0);
}

TEST_CASE("scaling law: physical spectrum = energy_scale * reduced spectrum") {
    for (double g : {0.5, 1.0, 2.0}) {
        const PhysicalPotential phys(g, 1.0, -2.0);
        const Reduction red = phys.reduce();

        MeshSpec physical_spec;
        physical_spec.nodes = 128;
        physical_spec.count = 4;
        physical_spec.half_width = 8.0 / g;  // deliberately not the image of the reduced box
        const MeshSolution physical = solve_mesh(MeshProblem::from(phys), physical_spec);

        MeshSpec reduced_spec;
        reduced_spec.nodes = 128;
        reduced_spec.count = 4;
        reduced_spec.hbar_eff = red.hbar_eff;
        const MeshSolution reduced = solve_mesh(red.potential, reduced_spec);

        for (int k = 0; k < 4; ++k) {
            const double expected = red.energy_scale * reduced.states[k].energy;
            const double got = physical.states[k].energy;
            CHECK(std::abs(got - expected) / expected <= 1e-9);
        }
    }
}
