#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "quartic/errors.hpp"
#include "quartic/potentials.hpp"
#include "quartic/trialfn.hpp"

namespace quartic {

/// Controls for integrals over the real line.
///
/// The line is truncated to [center - half_width, center + half_width],
/// split into equal panels, and each panel is integrated with an
/// order-point Gauss-Legendre rule. The panel count doubles until two
/// successive levels agree to rel_tol (relative to the integral of |f|).
/// If the integrand at the window edges exceeds truncation times its
/// sampled peak, the window is widened.
struct QuadratureSpec {
    double rel_tol = 1e-12;
    double truncation = 1e-20;
    double half_width = 12.0;
    double max_half_width = 48.0;
    int order = 20;
    int initial_panels = 16;
    int max_panels = 4096;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached per order; safe to call concurrently.
const GaussLegendreRule& gauss_legendre(int order);

/// Values and error estimates of several integrals sharing one integrand sweep.
struct LineIntegrals {
    std::vector<double> value;
    std::vector<double> error;
    int panels = 0;
    double half_width = 0.0;
};

struct ScalarIntegral {
    double value;
    double error;
};

namespace detail {

template <class F>
void sweep(const F& f, std::size_t count, double center, double half_width, int panels,
           const GaussLegendreRule& rule, std::vector<double>& sum, std::vector<double>& abs_sum,
           std::vector<double>& y) {
    sum.assign(count, 0.0);
    abs_sum.assign(count, 0.0);
    const double width = 2.0 * half_width / panels;
    const double half = 0.5 * width;
    for (int k = 0; k < panels; ++k) {
        const double mid = -half_width + (k + 0.5) * width;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            f(center + mid + half * rule.nodes[i], y.data());
            const double w = half * rule.weights[i];
            for (std::size_t c = 0; c < count; ++c) {
                sum[c] += w * y[c];
                abs_sum[c] += w * std::abs(y[c]);
            }
        }
    }
}

}  // namespace detail

/// Integrates `count` functions at once; f(u, out) writes out[0..count).
/// Throws ConvergenceError (carrying the last two levels of the worst
/// component) if max_panels is reached first.
template <class F>
LineIntegrals integrate_lines(const F& f, std::size_t count, double center, const QuadratureSpec& spec) {
    if (!std::isfinite(center)) throw DomainError("integration center must be finite");
    if (count == 0) throw DomainError("nothing to integrate");
    const GaussLegendreRule& rule = gauss_legendre(spec.order);
    std::vector<double> y(count), lo(count), hi(count), peak(count);

    double half_width = spec.half_width;
    for (;;) {
        std::fill(peak.begin(), peak.end(), 0.0);
        for (int k = -64; k <= 64; ++k) {
            f(center + half_width * k / 64.0, y.data());
            for (std::size_t c = 0; c < count; ++c) peak[c] = std::max(peak[c], std::abs(y[c]));
        }
        f(center - half_width, lo.data());
        f(center + half_width, hi.data());
        bool negligible = true;
        for (std::size_t c = 0; c < count; ++c)
            if (std::max(std::abs(lo[c]), std::abs(hi[c])) > spec.truncation * peak[c]) negligible = false;
        if (negligible) break;
        if (half_width * 1.5 > spec.max_half_width)
            throw ConvergenceError("integrand does not decay inside the maximal window", 0.0, 0.0);
        half_width *= 1.5;
    }

    std::vector<double> coarse, coarse_abs, fine, fine_abs;
    int panels = spec.initial_panels;
    detail::sweep(f, count, center, half_width, panels, rule, coarse, coarse_abs, y);
    for (;;) {
        detail::sweep(f, count, center, half_width, 2 * panels, rule, fine, fine_abs, y);
        LineIntegrals out;
        out.panels = 2 * panels;
        out.half_width = half_width;
        out.value = fine;
        out.error.resize(count);
        bool accepted = true;
        std::size_t worst = 0;
        double worst_ratio = 0.0;
        for (std::size_t c = 0; c < count; ++c) {
            out.error[c] = std::abs(fine[c] - coarse[c]);
            const double scale = std::max(fine_abs[c], std::numeric_limits<double>::min());
            const double ratio = out.error[c] / scale;
            if (ratio > spec.rel_tol) accepted = false;
            if (ratio > worst_ratio) {
                worst_ratio = ratio;
                worst = c;
            }
        }
        if (accepted) return out;
        if (4 * panels > spec.max_panels)
            throw ConvergenceError("quadrature did not reach the requested tolerance", coarse[worst], fine[worst]);
        coarse.swap(fine);
        panels *= 2;
    }
}

/// Scalar convenience wrapper.
ScalarIntegral integrate_line(const std::function<double(double)>& f, double center,
                              const QuadratureSpec& spec = {});

struct RayleighQuotient {
    double energy;
    double error;
    double norm;      // integral of psi^2
    double kinetic;   // integral of psi'^2 / norm
    double potential; // integral of V psi^2 / norm
};

/// Supplies psi and psi' at a point.
using WaveFunction = std::function<ValueSlope(double)>;

/// E = (int psi'^2 + V psi^2) / int psi^2 for H = -(hbar)^2 d^2/du^2 + V.
/// Throws DegeneracyError when int psi^2 is not a usable positive number.
RayleighQuotient rayleigh_quotient(const WaveFunction& psi, const std::function<double(double)>& potential,
                                   double center, const QuadratureSpec& spec = {}, double hbar_eff = 1.0);

RayleighQuotient rayleigh_quotient(const TrialFunction& psi, const ReducedPotential& pot,
                                   const QuadratureSpec& spec = {});

/// int psi_a psi_b du.
ScalarIntegral inner_product(const std::function<double(double)>& psi_a, const std::function<double(double)>& psi_b,
                             double center, const QuadratureSpec& spec = {});

ScalarIntegral inner_product(const TrialFunction& psi_a, const TrialFunction& psi_b,
                             const QuadratureSpec& spec = {});

}  // namespace quartic
