#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

/// Argument outside the mathematical domain of an operation (non-finite
/// coordinate, B <= 0, mismatched grids, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A refinement loop (quadrature or mesh doubling) failed to settle.
/// Carries the last two estimates so callers can report them.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double coarse, double fine)
        : std::runtime_error(what), coarse_(coarse), fine_(fine) {}

    double coarse_estimate() const noexcept { return coarse_; }
    double fine_estimate() const noexcept { return fine_; }

private:
    double coarse_;
    double fine_;
};

/// Wavefunction with (numerically) zero norm or a singular moment system.
class DegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace quartic
