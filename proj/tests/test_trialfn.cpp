#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <random>

#include "quartic/errors.hpp"
#include "quartic/quadrature.hpp"
#include "quartic/trialfn.hpp"

using namespace quartic;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

// Direct 50-digit transcriptions of the two closed forms, kept independent
// of TrialFunction (no shared envelope code, no log-space evaluation).
big oracle_single(const char* A_, const char* B_, int p, const char* u_) {
    const big A(A_), B(B_), u(u_);
    const big r = sqrt(B * B + u * u);
    const big prefactor = pow(u, p) / (pow(B * B + u * u, big(0.25)) * pow(B + r, big(p) + big(0.5)));
    return prefactor * exp(-(A + (B * B + 3) * u * u / 6 + pow(u, 4) / 3) / r + A / B);
}

big oracle_double(const char* A_, const char* B_, const char* a_, const char* b_, int alpha, int p, const char* u_) {
    const big A(A_), B(B_), a(a_), b(b_), u(u_);
    const big t = u - big(0.5);
    const big r = sqrt(B * B + t * t);
    const big g = (a * t + b * t * t * t) / r;
    const big d = p == 0 ? cosh(g) : sinh(g);
    const big prefactor = 1 / (pow(B * B + t * t, big(0.25)) * pow(alpha * B + r, big(0.5)));
    return prefactor * exp(-(A + (B * B + 3) * t * t / 6 + pow(t, 4) / 3) / r + A / B) * d;
}

TrialParams single_7a() { return {-0.6244, 2.3667, 0.0, 0.0, 1}; }
TrialParams single_7b() { return {-1.9289, 2.5598, 0.0, 0.0, 1}; }
TrialParams double_00() { return {2.3237, 3.2734, 2.3839, 0.0605, 1}; }
TrialParams double_01() { return {-2.2957, 3.6991, 4.7096, 0.0590, 1}; }

}  // namespace

TEST_CASE("psi_single matches the high-precision transcription") {
    const EvenPolynomial one(0.0);
    const double v00 = psi_single(single_7a(), {0, 0}, one, 1.0);
    CHECK(std::abs(v00 - oracle_single("-0.6244", "2.3667", 0, "1").convert_to<double>()) <= 1e-12 * std::abs(v00));
    // frozen from an independent 40-digit mpmath evaluation
    CHECK(std::abs(v00 - 0.13826460587148570232) <= 1e-12 * 0.1383);

    const double v01 = psi_single(single_7b(), {0, 1}, one, 0.7);
    CHECK(std::abs(v01 - oracle_single("-1.9289", "2.5598", 1, "0.7").convert_to<double>()) <= 1e-12 * std::abs(v01));
    CHECK(std::abs(v01 - 0.025415836921811718298) <= 1e-12 * 0.0254);
}

TEST_CASE("psi_double matches the high-precision transcription") {
    const EvenPolynomial one(0.5);
    const double v00 = psi_double(double_00(), {0, 0}, one, 0.0);
    CHECK(std::abs(v00 - oracle_double("2.3237", "3.2734", "2.3839", "0.0605", 1, 0, "0").convert_to<double>()) <=
          1e-12 * std::abs(v00));
    CHECK(std::abs(v00 - 0.19251787668817617905) <= 1e-12 * 0.1925);

    const double v01 = psi_double(double_01(), {0, 1}, one, 1.3);
    CHECK(std::abs(v01 - 0.13184793412346580612) <= 1e-12 * 0.1318);

    // simplified model: alpha = 0, b = 0
    const TrialParams simple{2.3237, 3.2734, 2.3839, 0.0, 0};
    const double vs = psi_double(simple, {0, 0}, one, 0.2);
    CHECK(std::abs(vs - oracle_double("2.3237", "3.2734", "2.3839", "0", 0, 0, "0.2").convert_to<double>()) <=
          1e-12 * std::abs(vs));
    CHECK(std::abs(vs - 0.29317880065001687647) <= 1e-12 * 0.2932);
}

TEST_CASE("parity of the single-well family about u = 0") {
    const EvenPolynomial one(0.0);
    CHECK(psi_single(single_7b(), {0, 1}, one, 0.0) == 0.0);
    const EvenPolynomial quad({-0.7}, 0.0);
    for (double u : {0.1, 0.5, 1.0, 2.2, 3.7, 6.0}) {
        for (int p : {0, 1}) {
            const TrialFunction f(TrialFamily::SingleWell, p == 0 ? single_7a() : single_7b(), {0, p}, one);
            const double sign = p == 0 ? 1.0 : -1.0;
            CHECK(std::abs(f.value(-u) - sign * f.value(u)) <= 1e-14 * std::abs(f.value(u)));
            const TrialFunction g(TrialFamily::SingleWell, single_7a(), {1, p}, quad);
            CHECK(std::abs(g.value(-u) - sign * g.value(u)) <= 1e-14 * std::abs(g.value(u)));
        }
    }
}

TEST_CASE("parity of the double-well family about u = 1/2") {
    const EvenPolynomial one(0.5);
    CHECK(psi_double(double_01(), {0, 1}, one, 0.5) == 0.0);
    for (double u : {-2.0, -0.3, 0.0, 0.2, 0.45}) {
        const TrialFunction even(TrialFamily::DoubleWell, double_00(), {0, 0}, one);
        const TrialFunction odd(TrialFamily::DoubleWell, double_01(), {0, 1}, one);
        CHECK(std::abs(even.value(1.0 - u) - even.value(u)) <= 1e-14 * std::abs(even.value(u)));
        CHECK(std::abs(odd.value(1.0 - u) + odd.value(u)) <= 1e-14 * std::abs(odd.value(u)));
    }
}

TEST_CASE("analytic derivative agrees with central differences") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-3.0, 4.0);
    const std::vector<TrialFunction> functions = {
        {TrialFamily::SingleWell, single_7a(), {0, 0}, EvenPolynomial(0.0)},
        {TrialFamily::SingleWell, single_7b(), {0, 1}, EvenPolynomial(0.0)},
        {TrialFamily::SingleWell, single_7a(), {1, 1}, EvenPolynomial({-1.1}, 0.0)},
        {TrialFamily::DoubleWell, double_00(), {0, 0}, EvenPolynomial(0.5)},
        {TrialFamily::DoubleWell, double_01(), {0, 1}, EvenPolynomial(0.5)},
        {TrialFamily::DoubleWell, {-1.36, 3.64, 2.22, 0.052, 1}, {1, 0}, EvenPolynomial({-0.36}, 0.5)},
        {TrialFamily::DoubleWell, {15.1, 4.05, 3.03, 0.0, 0}, {2, 1}, EvenPolynomial({0.4, -2.0}, 0.5)},
    };
    const double h = 1e-5;
    for (const auto& f : functions) {
        for (int i = 0; i < 100; ++i) {
            const double u = dist(rng);
            const double analytic = f.derivative(u);
            const double fd = (f.value(u + h) - f.value(u - h)) / (2 * h);
            CHECK(std::abs(analytic - fd) <= 1e-7 * (1.0 + std::abs(analytic)));
        }
    }
    CHECK(std::abs(psi_prime(TrialFamily::DoubleWell, double_00(), {0, 0}, EvenPolynomial(0.5), 0.5)) <= 1e-16);
    CHECK(psi_prime(TrialFamily::SingleWell, single_7a(), {0, 0}, EvenPolynomial(0.0), 0.0) == 0.0);
}

TEST_CASE("tails decay like exp(-|v|^3/3)") {
    const TrialFunction f(TrialFamily::DoubleWell, double_00(), {0, 0}, EvenPolynomial(0.5), false);
    const double B = double_00().B;
    auto residual = [&](double v) {
        // compare in log space; the value itself underflows long before v = 20
        const double r = std::sqrt(B * B + v * v);
        const double q = double_00().A + (B * B + 3) * v * v / 6 + v * v * v * v / 3;
        const double g = (double_00().a * v + double_00().b * v * v * v) / r;
        const double log_abs = -q / r - 0.5 * std::log(r) - 0.5 * std::log(B + r) + std::log(std::cosh(g));
        // cross-check the closed form against the evaluator where it is representable
        if (v <= 8.0) CHECK(std::abs(log_abs - std::log(f.value(0.5 + v))) <= 1e-10 * std::abs(log_abs));
        return log_abs + v * v * v * v / (3.0 * r);
    };
    const double r5 = std::abs(residual(5.0)) / 25.0;
    const double r10 = std::abs(residual(10.0)) / 100.0;
    const double r20 = std::abs(residual(20.0)) / 400.0;
    CHECK(r10 < r5);
    CHECK(r20 < r10);
}

TEST_CASE("dropping exp(A/B) rescales by a constant only") {
    for (const auto& [family, params, qn, shift] :
         {std::tuple{TrialFamily::SingleWell, single_7a(), QuantumNumbers{0, 0}, 0.0},
          std::tuple{TrialFamily::DoubleWell, double_01(), QuantumNumbers{0, 1}, 0.5}}) {
        const TrialFunction with(family, params, qn, EvenPolynomial(shift), true);
        const TrialFunction without(family, params, qn, EvenPolynomial(shift), false);
        const double ratio0 = with.value(0.9) / without.value(0.9);
        CHECK(ratio0 == doctest::Approx(std::exp(params.A / params.B)).epsilon(1e-14));
        for (double u : {-2.0, -0.4, 0.1, 1.7, 3.0})
            CHECK(std::abs(with.value(u) / without.value(u) - ratio0) <= 1e-14 * ratio0);
    }
    const auto dw = ReducedPotential::double_well();
    const TrialFunction with(TrialFamily::DoubleWell, double_00(), {0, 0}, EvenPolynomial(0.5), true);
    const TrialFunction without(TrialFamily::DoubleWell, double_00(), {0, 0}, EvenPolynomial(0.5), false);
    CHECK(std::abs(rayleigh_quotient(with, dw).energy - rayleigh_quotient(without, dw).energy) <= 1e-12);
}

TEST_CASE("alpha = 0, b = 0, n = 0 reduces to the simplified double-well function") {
    const TrialParams p{1.7, 3.9, 2.9, 0.0, 0};
    for (int parity : {0, 1}) {
        const TrialFunction f(TrialFamily::DoubleWell, p, {0, parity}, EvenPolynomial(0.5));
        for (double u : {-1.0, 0.1, 0.5, 0.8, 2.0}) {
            const double v = u - 0.5;
            const double r = std::sqrt(p.B * p.B + v * v);
            const double g = p.a * v / r;
            const double d = parity == 0 ? std::cosh(g) : std::sinh(g);
            const double expected = d / (std::pow(r * r, 0.25) * std::sqrt(r)) *
                                    std::exp(-(p.A + (p.B * p.B + 3) * v * v / 6 + v * v * v * v / 3) / r + p.A / p.B);
            CHECK(std::abs(f.value(u) - expected) <= 1e-14 * std::max(1e-300, std::abs(expected)));
        }
    }
}

TEST_CASE("domain errors") {
    const EvenPolynomial one(0.0);
    CHECK_THROWS_AS(psi_single({0.0, 0.0, 0, 0, 1}, {0, 0}, one, 1.0), DomainError);
    CHECK_THROWS_AS(psi_single({0.0, -1.0, 0, 0, 1}, {0, 0}, one, 1.0), DomainError);
    CHECK_THROWS_AS(psi_double({0.0, 2.0, 1, 0, 2}, {0, 0}, EvenPolynomial(0.5), 1.0), DomainError);
    CHECK_THROWS_AS(psi_double(double_00(), {0, 0}, one, 1.0), DomainError);  // wrong shift
    CHECK_THROWS_AS(psi_single(single_7a(), {1, 0}, one, 1.0), DomainError);  // degree != n
    CHECK_THROWS_AS(psi_single(single_7a(), {0, 2}, one, 1.0), DomainError);
    CHECK_THROWS_AS(psi_single(single_7a(), {0, 0}, one, NAN), DomainError);
}

TEST_CASE("EvenPolynomial is monic and evaluates in t") {
    const EvenPolynomial p({2.0, -3.0}, 0.5);  // t^2 - 3t + 2 = (t-1)(t-2)
    CHECK(p.degree() == 2);
    CHECK(p.coefficients().back() == 1.0);
    CHECK(p.value(1.0) == 0.0);
    CHECK(p.value(3.0) == 2.0);
    CHECK(p.derivative(3.0) == 3.0);
    const auto roots = p.roots();
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == doctest::Approx(1.0));
    CHECK(roots[1] == doctest::Approx(2.0));
    CHECK(EvenPolynomial(0.0).degree() == 0);
    CHECK(EvenPolynomial(0.0).value(5.0) == 1.0);
    CHECK(QuantumNumbers{2, 1}.excitation() == 5);
}
