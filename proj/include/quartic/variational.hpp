#pragma once

#include <utility>
#include <vector>

#include "quartic/grid_function.hpp"
#include "quartic/meshref.hpp"
#include "quartic/nelder_mead.hpp"
#include "quartic/potentials.hpp"
#include "quartic/quadrature.hpp"
#include "quartic/trialfn.hpp"

namespace quartic {

/// Outcome of a Rayleigh-Ritz minimization for one state.
struct SolveReport {
    double energy = 0.0;
    TrialParams params;
    QuantumNumbers qn;
    TrialFamily family = TrialFamily::DoubleWell;
    EvenPolynomial polynomial;
    double quadrature_error = 0.0;
    int iterations = 0;
    int evaluations = 0;
    int restarts = 0;
    bool converged = false;

    TrialFunction trial() const { return {family, params, qn, polynomial}; }
};

struct OptimizeOptions {
    QuadratureSpec quadrature;
    NelderMeadOptions simplex;
    bool freeze_b = false;
    // initial simplex steps for A, B, a_p, b_p
    double step_A = 0.1;
    double step_B = 0.1;
    double step_a = 0.1;
    double step_b = 0.01;
    int restarts = 1;
};

/// Trial family solving `pot`; only the single and double wells have one.
TrialFamily family_for(const ReducedPotential& pot);

/// Starting parameters: the 4-decimal single-well interpolation values for
/// the matching parity, (2, 3, 2, 0) / (-2, 3, 4, 0) for the double well.
TrialParams default_initial_params(const ReducedPotential& pot, const QuantumNumbers& qn, int alpha = 1);

/// Monic degree-n polynomial making the trial function for (n, p) with
/// `params` orthogonal to every lower state of the same parity.
/// lower_states[k] must hold state (k, p) for k = 0..n-1.
EvenPolynomial build_orthogonal_polynomial(const ReducedPotential& pot, const QuantumNumbers& qn,
                                           const TrialParams& params, const std::vector<SolveReport>& lower_states,
                                           const QuadratureSpec& spec = {});

/// Minimizes the Rayleigh quotient over {A, B} (single well) or
/// {A, B, a_p[, b_p]} (double well; alpha stays as given in init).
SolveReport optimize(const ReducedPotential& pot, const QuantumNumbers& qn, const TrialParams& init,
                     const std::vector<SolveReport>& lower_states, const OptimizeOptions& options = {});

/// States (0, p) .. (n_max, p), each started from the previous optimum.
std::vector<SolveReport> solve_ladder(const ReducedPotential& pot, int parity, int n_max, const TrialParams& init,
                                      const OptimizeOptions& options = {});

/// Normalized overlap <psi_a, psi_b> / (|psi_a| |psi_b|).
double normalized_overlap(const TrialFunction& a, const TrialFunction& b, const QuadratureSpec& spec = {});

/// Unit-L2 (over the whole line) samples with the reporting sign
/// convention: positive at the center for p = 0, positive slope there for p = 1.
GridFunction sample_trial(const TrialFunction& psi, const std::vector<double>& grid, const QuadratureSpec& spec = {});
GridFunction sample_mesh(const MeshState& state, const std::vector<double>& grid);

struct WaveComparison {
    double sup_deviation;
    int aligned_sign;
};

/// min over s = +-1 of max |a - s b|. Grids must coincide.
WaveComparison compare_wavefunctions(const GridFunction& a, const GridFunction& b);

/// Largest pointwise relative deviation |trial - ref| / max(|ref|, floor * max_window |ref|)
/// over grid points inside [lo, hi]. The floor keeps odd states finite at their node.
double under_barrier_accuracy(const GridFunction& trial, const GridFunction& ref, double lo = 0.25,
                              double hi = 0.75, double floor = 1e-3);

}  // namespace quartic
