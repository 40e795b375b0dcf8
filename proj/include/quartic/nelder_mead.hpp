#pragma once

#include <functional>
#include <vector>

namespace quartic {

struct NelderMeadOptions {
    double xtol = 1e-8;          // simplex extent per coordinate, relative to the initial step
    double ftol = 1e-15;         // spread of values across the simplex, relative to max(1, |f|)
    double history_tol = 1e-12;  // best-value change over the last `history` accepted steps
    int history = 10;
    int max_evaluations = 20000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
};

/// Minimizes f starting from a right-angled simplex x0 + steps[i] e_i.
/// f may return +inf to reject a point.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, const std::vector<double>& steps,
                             const NelderMeadOptions& options = {});

}  // namespace quartic
