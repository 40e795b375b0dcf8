#include "quartic/variational.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "quartic/errors.hpp"

namespace quartic {

TrialFamily family_for(const ReducedPotential& pot) {
    switch (pot.kind()) {
        case PotentialKind::SingleWellQuartic: return TrialFamily::SingleWell;
        case PotentialKind::DoubleWell: return TrialFamily::DoubleWell;
        default: throw DomainError("no trial-function family for potential " + pot.name());
    }
}

TrialParams default_initial_params(const ReducedPotential& pot, const QuantumNumbers& qn, int alpha) {
    qn.validate();
    TrialParams params;
    params.alpha = alpha;
    if (family_for(pot) == TrialFamily::SingleWell) {
        if (qn.p == 0) {
            params.A = -0.6244;
            params.B = 2.3667;
        } else {
            params.A = -1.9289;
            params.B = 2.5598;
        }
        return params;
    }
    if (qn.p == 0) {
        params.A = 2.0;
        params.B = 3.0;
        params.a = 2.0;
    } else {
        params.A = -2.0;
        params.B = 3.0;
        params.a = 4.0;
    }
    params.b = 0.0;
    return params;
}

namespace {

double center_of(TrialFamily family) { return family == TrialFamily::SingleWell ? 0.0 : 0.5; }

void check_lower_states(TrialFamily family, const QuantumNumbers& qn, const std::vector<SolveReport>& lower) {
    if (static_cast<int>(lower.size()) < qn.n)
        throw DomainError("state n=" + std::to_string(qn.n) + " needs all lower states of its parity");
    for (int k = 0; k < qn.n; ++k) {
        const SolveReport& r = lower[static_cast<std::size_t>(k)];
        if (r.qn.n != k || r.qn.p != qn.p || r.family != family)
            throw DomainError("lower state " + std::to_string(k) + " does not match (k, p) ordering");
    }
}

}  // namespace

EvenPolynomial build_orthogonal_polynomial(const ReducedPotential& pot, const QuantumNumbers& qn,
                                           const TrialParams& params, const std::vector<SolveReport>& lower_states,
                                           const QuadratureSpec& spec) {
    const TrialFamily family = family_for(pot);
    qn.validate();
    const double center = center_of(family);
    if (qn.n == 0) return EvenPolynomial(center);
    check_lower_states(family, qn, lower_states);

    const int n = qn.n;
    const TrialFunction base(family, params, qn, EvenPolynomial(std::vector<double>(static_cast<std::size_t>(n), 0.0), center));
    std::vector<TrialFunction> lower;
    lower.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) lower.push_back(lower_states[static_cast<std::size_t>(k)].trial());

    // moment (j, k) = int t^k base(u) psi_j(u) du, t = (u - center)^2, k = 0..n
    const std::size_t stride = static_cast<std::size_t>(n) + 1;
    auto integrand = [&](double u, double* out) {
        const double v = u - center;
        const double t = v * v;
        const double b = base.evaluate_base(u).value;
        for (std::size_t j = 0; j < lower.size(); ++j) {
            double tk = 1.0;
            const double bj = b * lower[j].value(u);
            for (std::size_t k = 0; k < stride; ++k) {
                out[j * stride + k] = tk * bj;
                tk *= t;
            }
        }
    };
    const LineIntegrals moments = integrate_lines(integrand, lower.size() * stride, center, spec);

    Eigen::MatrixXd system(n, n);
    Eigen::VectorXd rhs(n);
    for (int j = 0; j < n; ++j) {
        double row_scale = 0.0;
        for (int k = 0; k <= n; ++k)
            row_scale = std::max(row_scale, std::abs(moments.value[static_cast<std::size_t>(j) * stride + k]));
        if (!(row_scale > 0.0) || !std::isfinite(row_scale)) throw DegeneracyError("vanishing orthogonality moments");
        for (int k = 0; k < n; ++k) system(j, k) = moments.value[static_cast<std::size_t>(j) * stride + k] / row_scale;
        rhs(j) = -moments.value[static_cast<std::size_t>(j) * stride + n] / row_scale;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
    lu.setThreshold(1e-13);
    if (!lu.isInvertible()) throw DegeneracyError("orthogonality system is singular");
    const Eigen::VectorXd c = lu.solve(rhs);
    std::vector<double> coeffs(c.data(), c.data() + n);
    for (double x : coeffs)
        if (!std::isfinite(x)) throw DegeneracyError("orthogonality system produced non-finite coefficients");
    return EvenPolynomial(std::move(coeffs), center);
}

namespace {

struct Layout {
    TrialFamily family;
    bool freeze_b;

    std::vector<double> pack(const TrialParams& p) const {
        if (family == TrialFamily::SingleWell) return {p.A, p.B};
        if (freeze_b) return {p.A, p.B, p.a};
        return {p.A, p.B, p.a, p.b};
    }

    TrialParams unpack(const std::vector<double>& x, const TrialParams& fixed) const {
        TrialParams p = fixed;
        p.A = x[0];
        p.B = x[1];
        if (family == TrialFamily::DoubleWell) {
            p.a = x[2];
            if (!freeze_b) p.b = x[3];
        }
        return p;
    }

    std::vector<double> steps(const OptimizeOptions& o) const {
        if (family == TrialFamily::SingleWell) return {o.step_A, o.step_B};
        if (freeze_b) return {o.step_A, o.step_B, o.step_a};
        return {o.step_A, o.step_B, o.step_a, o.step_b};
    }
};

}  // namespace

SolveReport optimize(const ReducedPotential& pot, const QuantumNumbers& qn, const TrialParams& init,
                     const std::vector<SolveReport>& lower_states, const OptimizeOptions& options) {
    const TrialFamily family = family_for(pot);
    qn.validate();
    if (family == TrialFamily::SingleWell)
        init.validate_single();
    else
        init.validate_double();
    check_lower_states(family, qn, lower_states);

    const Layout layout{family, options.freeze_b};
    auto energy_of = [&](const TrialParams& p) {
        const EvenPolynomial poly = build_orthogonal_polynomial(pot, qn, p, lower_states, options.quadrature);
        return std::make_pair(rayleigh_quotient(TrialFunction(family, p, qn, poly), pot, options.quadrature), poly);
    };
    auto objective = [&](const std::vector<double>& x) {
        const TrialParams p = layout.unpack(x, init);
        if (!(p.B > 0.0)) return std::numeric_limits<double>::infinity();
        try {
            return energy_of(p).first.energy;
        } catch (const DegeneracyError&) {
        } catch (const ConvergenceError&) {
        } catch (const DomainError&) {
        }
        return std::numeric_limits<double>::infinity();
    };

    const std::vector<double> steps = layout.steps(options);
    NelderMeadResult best = nelder_mead(objective, layout.pack(init), steps, options.simplex);
    SolveReport report;
    report.iterations = best.iterations;
    report.evaluations = best.evaluations;
    bool converged = best.converged;
    for (int r = 0; r < options.restarts; ++r) {
        NelderMeadResult again = nelder_mead(objective, best.x, steps, options.simplex);
        report.iterations += again.iterations;
        report.evaluations += again.evaluations;
        ++report.restarts;
        converged = again.converged;
        if (again.value <= best.value) best = std::move(again);
    }

    report.params = layout.unpack(best.x, init);
    report.qn = qn;
    report.family = family;
    const auto [quotient, poly] = energy_of(report.params);
    report.polynomial = poly;
    report.energy = quotient.energy;
    report.quadrature_error = quotient.error;
    report.converged = converged && std::isfinite(report.energy);
    return report;
}

std::vector<SolveReport> solve_ladder(const ReducedPotential& pot, int parity, int n_max, const TrialParams& init,
                                      const OptimizeOptions& options) {
    if (n_max < 0) throw DomainError("n_max must be non-negative");
    std::vector<SolveReport> reports;
    TrialParams start = init;
    for (int n = 0; n <= n_max; ++n) {
        reports.push_back(optimize(pot, {n, parity}, start, reports, options));
        start = reports.back().params;
    }
    return reports;
}

double normalized_overlap(const TrialFunction& a, const TrialFunction& b, const QuadratureSpec& spec) {
    const double ab = inner_product(a, b, spec).value;
    const double aa = inner_product(a, a, spec).value;
    const double bb = inner_product(b, b, spec).value;
    return ab / std::sqrt(aa * bb);
}

GridFunction sample_trial(const TrialFunction& psi, const std::vector<double>& grid, const QuadratureSpec& spec) {
    const double norm = inner_product(psi, psi, spec).value;
    if (!(norm > 0.0) || !std::isfinite(norm)) throw DegeneracyError("trial function has vanishing norm");
    const ValueSlope at_center = psi.evaluate(psi.center());
    const double probe = psi.quantum_numbers().p == 0 ? at_center.value : at_center.slope;
    const double scale = (probe < 0.0 ? -1.0 : 1.0) / std::sqrt(norm);
    GridFunction out;
    out.abscissas = grid;
    out.values.reserve(grid.size());
    for (double u : grid) out.values.push_back(scale * psi.value(u));
    out.normalization = Normalization::UnitL2;
    out.validate();
    return out;
}

GridFunction sample_mesh(const MeshState& state, const std::vector<double>& grid) {
    GridFunction out;
    out.abscissas = grid;
    out.values.reserve(grid.size());
    for (double u : grid) out.values.push_back(state.expansion.value(u));
    out.normalization = Normalization::UnitL2;
    out.validate();
    return out;
}

namespace {

void require_same_grid(const GridFunction& a, const GridFunction& b) {
    a.validate();
    b.validate();
    if (a.abscissas.size() != b.abscissas.size()) throw DomainError("grid functions sampled on different grids");
    for (std::size_t i = 0; i < a.abscissas.size(); ++i) {
        const double tol = 1e-12 * std::max(1.0, std::abs(a.abscissas[i]));
        if (std::abs(a.abscissas[i] - b.abscissas[i]) > tol)
            throw DomainError("grid functions sampled on different grids");
    }
}

}  // namespace

WaveComparison compare_wavefunctions(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    double plus = 0.0, minus = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        plus = std::max(plus, std::abs(a.values[i] - b.values[i]));
        minus = std::max(minus, std::abs(a.values[i] + b.values[i]));
    }
    return minus < plus ? WaveComparison{minus, -1} : WaveComparison{plus, +1};
}

double under_barrier_accuracy(const GridFunction& trial, const GridFunction& ref, double lo, double hi,
                              double floor) {
    require_same_grid(trial, ref);
    if (!(hi > lo) || lo < ref.abscissas.front() || hi > ref.abscissas.back())
        throw DomainError("under-barrier window lies outside the grid");
    double peak = 0.0;
    for (std::size_t i = 0; i < ref.abscissas.size(); ++i)
        if (ref.abscissas[i] >= lo && ref.abscissas[i] <= hi) peak = std::max(peak, std::abs(ref.values[i]));
    if (peak == 0.0) return 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < ref.abscissas.size(); ++i) {
        if (ref.abscissas[i] < lo || ref.abscissas[i] > hi) continue;
        const double denom = std::max(std::abs(ref.values[i]), floor * peak);
        worst = std::max(worst, std::abs(trial.values[i] - ref.values[i]) / denom);
    }
    return worst;
}

}  // namespace quartic
