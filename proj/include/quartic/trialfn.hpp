#pragma once

#include <vector>

namespace quartic {

struct QuantumNumbers {
    int n = 0;  // nodes within the parity sector
    int p = 0;  // parity, 0 even / 1 odd

    /// Excitation number 2n + p of the single-well state.
    int excitation() const noexcept { return 2 * n + p; }

    void validate() const;

    friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Interpolation/variational parameters. a_p, b_p and alpha only enter
/// the double-well family.
struct TrialParams {
    double A = 0.0;
    double B = 1.0;
    double a = 0.0;
    double b = 0.0;
    int alpha = 1;

    void validate_single() const;
    void validate_double() const;

    friend bool operator==(const TrialParams&, const TrialParams&) = default;
};

/// Monic polynomial of degree n in t = (u - shift)^2.
/// coefficients()[k] multiplies t^k; the last entry is always 1.
class EvenPolynomial {
public:
    /// P = 1.
    explicit EvenPolynomial(double shift = 0.0);

    /// Leading coefficient 1 is appended to the given lower coefficients.
    EvenPolynomial(std::vector<double> lower_coefficients, double shift);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    double shift() const noexcept { return shift_; }
    const std::vector<double>& coefficients() const noexcept { return coeffs_; }

    /// P(t) and dP/dt.
    double value(double t) const noexcept;
    double derivative(double t) const noexcept;

    /// Roots in t of P, ascending, computed from the companion matrix.
    /// Complex roots are reported by their real part.
    std::vector<double> roots() const;

private:
    std::vector<double> coeffs_;
    double shift_;
};

enum class TrialFamily { SingleWell, DoubleWell };

struct ValueSlope {
    double value;
    double slope;
};

/// One closed-form trial wavefunction:
///
///   single well (center 0)
///     u^p P(u^2) / [(B^2+u^2)^{1/4} (B + r)^{2n+p+1/2}] exp(-Q(u)/r + A/B)
///
///   double well (center 1/2, v = u - 1/2)
///     P(v^2) / [(B^2+v^2)^{1/4} (alpha B + r)^{2n+1/2}] exp(-Q(v)/r + A/B) D_p(v)
///
/// with r = sqrt(B^2 + v^2), Q(v) = A + (B^2+3) v^2/6 + v^4/3 and
/// D_0 = cosh(g), D_1 = sinh(g), g = (a v + b v^3)/r.
class TrialFunction {
public:
    TrialFunction(TrialFamily family, TrialParams params, QuantumNumbers qn, EvenPolynomial poly,
                  bool keep_constant = true);

    TrialFamily family() const noexcept { return family_; }
    const TrialParams& params() const noexcept { return params_; }
    const QuantumNumbers& quantum_numbers() const noexcept { return qn_; }
    const EvenPolynomial& polynomial() const noexcept { return poly_; }
    double center() const noexcept { return family_ == TrialFamily::SingleWell ? 0.0 : 0.5; }

    double value(double u) const { return evaluate(u).value; }
    double derivative(double u) const { return evaluate(u).slope; }
    ValueSlope evaluate(double u) const;

    /// The same function with P replaced by 1 (the prefactor exponent still
    /// uses n). Orthogonality moments are integrals of t^k times this.
    ValueSlope evaluate_base(double u) const;

    TrialFunction with_polynomial(EvenPolynomial poly) const;

private:
    ValueSlope evaluate_impl(double u, bool unit_polynomial) const;

    TrialFamily family_;
    TrialParams params_;
    QuantumNumbers qn_;
    EvenPolynomial poly_;
    double log_constant_;
};

double psi_single(const TrialParams& params, const QuantumNumbers& qn, const EvenPolynomial& poly, double u);
double psi_double(const TrialParams& params, const QuantumNumbers& qn, const EvenPolynomial& poly, double u);
double psi_prime(TrialFamily which, const TrialParams& params, const QuantumNumbers& qn,
                 const EvenPolynomial& poly, double u);

}  // namespace quartic
