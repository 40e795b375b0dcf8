#include "quartic/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "quartic/errors.hpp"

namespace quartic {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, const std::vector<double>& steps,
                             const NelderMeadOptions& options) {
    const std::size_t dim = x0.size();
    if (dim == 0 || steps.size() != dim) throw DomainError("nelder_mead: dimension mismatch");

    NelderMeadResult result;
    auto eval = [&](const std::vector<double>& x) {
        ++result.evaluations;
        const double v = f(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };

    std::vector<Vertex> simplex;
    simplex.push_back({x0, eval(x0)});
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<double> x = x0;
        x[i] += steps[i];
        simplex.push_back({x, eval(x)});
    }

    auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
    std::deque<double> best_history;

    auto small_enough = [&]() {
        const Vertex& best = simplex.front();
        for (const Vertex& v : simplex)
            for (std::size_t i = 0; i < dim; ++i)
                if (std::abs(v.x[i] - best.x[i]) > options.xtol * std::abs(steps[i])) return false;
        return true;
    };
    auto history_flat = [&]() {
        if (static_cast<int>(best_history.size()) <= options.history) return false;
        return std::abs(best_history.front() - best_history.back()) <= options.history_tol;
    };

    std::vector<double> centroid(dim), trial(dim);
    auto along = [&](double coeff, const Vertex& worst) {
        for (std::size_t i = 0; i < dim; ++i) trial[i] = centroid[i] + coeff * (worst.x[i] - centroid[i]);
        return Vertex{trial, eval(trial)};
    };

    while (result.evaluations < options.max_evaluations) {
        std::stable_sort(simplex.begin(), simplex.end(), by_value);
        const double spread = simplex.back().f - simplex.front().f;
        if (spread <= options.ftol * std::max(1.0, std::abs(simplex.front().f)) && small_enough()) break;
        ++result.iterations;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[k].x[i] / static_cast<double>(dim);

        Vertex& worst = simplex.back();
        const Vertex reflected = along(-1.0, worst);
        if (reflected.f < simplex.front().f) {
            const Vertex expanded = along(-2.0, worst);
            worst = expanded.f < reflected.f ? expanded : reflected;
        } else if (reflected.f < simplex[dim - 1].f) {
            worst = reflected;
        } else {
            const bool outside = reflected.f < worst.f;
            const Vertex contracted = along(outside ? -0.5 : 0.5, worst);
            if (contracted.f < std::min(reflected.f, worst.f)) {
                worst = contracted;
            } else {
                const std::vector<double> anchor = simplex.front().x;
                for (std::size_t k = 1; k < simplex.size(); ++k) {
                    for (std::size_t i = 0; i < dim; ++i)
                        simplex[k].x[i] = anchor[i] + 0.5 * (simplex[k].x[i] - anchor[i]);
                    simplex[k].f = eval(simplex[k].x);
                }
            }
        }
        const double best = std::min_element(simplex.begin(), simplex.end(), by_value)->f;
        best_history.push_back(best);
        if (static_cast<int>(best_history.size()) > options.history + 1) best_history.pop_front();
    }

    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    result.x = simplex.front().x;
    result.value = simplex.front().f;
    result.converged = std::isfinite(result.value) && small_enough() && history_flat();
    return result;
}

}  // namespace quartic
