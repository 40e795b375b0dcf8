#include "quartic/grid_function.hpp"

#include <algorithm>
#include <cmath>

#include "quartic/errors.hpp"

namespace quartic {

void GridFunction::validate() const {
    if (abscissas.size() != values.size()) throw DomainError("grid function: abscissa/value size mismatch");
    if (abscissas.size() < 2) throw DomainError("grid function needs at least two points");
    for (std::size_t i = 1; i < abscissas.size(); ++i)
        if (!(abscissas[i] > abscissas[i - 1])) throw DomainError("grid abscissas must be strictly increasing");
}

double GridFunction::l2_norm_squared() const {
    validate();
    double sum = 0.0;
    for (std::size_t i = 1; i < abscissas.size(); ++i) {
        const double h = abscissas[i] - abscissas[i - 1];
        sum += 0.5 * h * (values[i] * values[i] + values[i - 1] * values[i - 1]);
    }
    return sum;
}

double GridFunction::value_at(double u) const {
    validate();
    if (u < abscissas.front() || u > abscissas.back()) throw DomainError("grid function evaluated outside its grid");
    auto it = std::upper_bound(abscissas.begin(), abscissas.end(), u);
    if (it == abscissas.end()) return values.back();
    const auto i = static_cast<std::size_t>(it - abscissas.begin());
    const double x0 = abscissas[i - 1], x1 = abscissas[i];
    const double w = (u - x0) / (x1 - x0);
    return (1.0 - w) * values[i - 1] + w * values[i];
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo)) throw DomainError("uniform grid needs n >= 2 and hi > lo");
    std::vector<double> out(static_cast<std::size_t>(n));
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
    out.back() = hi;
    return out;
}

}  // namespace quartic
