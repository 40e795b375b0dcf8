#include "quartic/quadrature.hpp"

#include <map>
#include <mutex>
#include <numbers>

namespace quartic {

namespace {

GaussLegendreRule build_rule(int order) {
    // Newton iteration on P_order from the Chebyshev-like initial guesses.
    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
    if (order < 2 || order > 200) throw DomainError("Gauss-Legendre order must lie in [2, 200]");
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
    return it->second;
}

ScalarIntegral integrate_line(const std::function<double(double)>& f, double center, const QuadratureSpec& spec) {
    auto wrapped = [&f](double u, double* out) { out[0] = f(u); };
    const LineIntegrals r = integrate_lines(wrapped, 1, center, spec);
    return {r.value[0], r.error[0]};
}

namespace {

RayleighQuotient finish_quotient(const LineIntegrals& r, double hbar_eff) {
    const double norm = r.value[0];
    if (!std::isfinite(norm) || norm < 1e-300) throw DegeneracyError("wavefunction has vanishing norm");
    const double h2 = hbar_eff * hbar_eff;
    const double kinetic = h2 * r.value[1] / norm;
    const double potential = r.value[2] / norm;
    const double energy = kinetic + potential;
    const double error = (h2 * r.error[1] + r.error[2] + std::abs(energy) * r.error[0]) / norm;
    return {energy, error, norm, kinetic, potential};
}

}  // namespace

RayleighQuotient rayleigh_quotient(const WaveFunction& psi, const std::function<double(double)>& potential,
                                   double center, const QuadratureSpec& spec, double hbar_eff) {
    auto integrand = [&](double u, double* out) {
        const ValueSlope y = psi(u);
        const double y2 = y.value * y.value;
        out[0] = y2;
        out[1] = y.slope * y.slope;
        out[2] = y2 == 0.0 ? 0.0 : potential(u) * y2;
    };
    return finish_quotient(integrate_lines(integrand, 3, center, spec), hbar_eff);
}

RayleighQuotient rayleigh_quotient(const TrialFunction& psi, const ReducedPotential& pot, const QuadratureSpec& spec) {
    auto integrand = [&](double u, double* out) {
        const ValueSlope y = psi.evaluate(u);
        const double y2 = y.value * y.value;
        out[0] = y2;
        out[1] = y.slope * y.slope;
        out[2] = y2 == 0.0 ? 0.0 : pot(u) * y2;
    };
    return finish_quotient(integrate_lines(integrand, 3, psi.center(), spec), 1.0);
}

ScalarIntegral inner_product(const std::function<double(double)>& psi_a, const std::function<double(double)>& psi_b,
                             double center, const QuadratureSpec& spec) {
    return integrate_line([&](double u) { return psi_a(u) * psi_b(u); }, center, spec);
}

ScalarIntegral inner_product(const TrialFunction& psi_a, const TrialFunction& psi_b, const QuadratureSpec& spec) {
    if (psi_a.center() != psi_b.center()) throw DomainError("inner product of functions with different centers");
    return integrate_line([&](double u) { return psi_a.value(u) * psi_b.value(u); }, psi_a.center(), spec);
}

}  // namespace quartic
