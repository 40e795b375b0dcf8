#pragma once

#include <vector>

namespace quartic {

enum class Normalization { None, UnitL2 };

/// A function sampled on strictly increasing abscissas.
struct GridFunction {
    std::vector<double> abscissas;
    std::vector<double> values;
    Normalization normalization = Normalization::None;

    /// Throws DomainError on size mismatch or non-increasing abscissas.
    void validate() const;

    /// Trapezoid-rule integral of values^2 (exact sinc-quadrature for
    /// uniform mesh nodes whose end values vanish).
    double l2_norm_squared() const;

    double value_at(double u) const;  // linear interpolation inside the grid
};

/// n points spanning [lo, hi] inclusive.
std::vector<double> uniform_grid(double lo, double hi, int n);

}  // namespace quartic
