#include "quartic/trialfn.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "quartic/errors.hpp"

namespace quartic {

void QuantumNumbers::validate() const {
    if (n < 0) throw DomainError("quantum number n must be non-negative");
    if (p != 0 && p != 1) throw DomainError("parity p must be 0 or 1");
}

void TrialParams::validate_single() const {
    if (!std::isfinite(A)) throw DomainError("A must be finite");
    if (!(B > 0.0) || !std::isfinite(B)) throw DomainError("B must be positive");
}

void TrialParams::validate_double() const {
    validate_single();
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("a_p, b_p must be finite");
    if (alpha != 0 && alpha != 1) throw DomainError("alpha must be 0 or 1");
}

EvenPolynomial::EvenPolynomial(double shift) : coeffs_{1.0}, shift_(shift) {}

EvenPolynomial::EvenPolynomial(std::vector<double> lower_coefficients, double shift)
    : coeffs_(std::move(lower_coefficients)), shift_(shift) {
    coeffs_.push_back(1.0);
}

double EvenPolynomial::value(double t) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double EvenPolynomial::derivative(double t) const noexcept {
    double acc = 0.0;
    for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) acc = acc * t + static_cast<double>(k) * coeffs_[k];
    return acc;
}

std::vector<double> EvenPolynomial::roots() const {
    const int n = degree();
    std::vector<double> out;
    if (n == 0) return out;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs_[i];
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i].real());
    std::sort(out.begin(), out.end());
    return out;
}

TrialFunction::TrialFunction(TrialFamily family, TrialParams params, QuantumNumbers qn, EvenPolynomial poly,
                             bool keep_constant)
    : family_(family), params_(params), qn_(qn), poly_(std::move(poly)) {
    qn_.validate();
    if (family_ == TrialFamily::SingleWell)
        params_.validate_single();
    else
        params_.validate_double();
    if (poly_.shift() != center())
        throw DomainError("polynomial shift " + std::to_string(poly_.shift()) + " does not match trial center");
    if (poly_.degree() != qn_.n) throw DomainError("polynomial degree must equal n");
    log_constant_ = keep_constant ? params_.A / params_.B : 0.0;
}

TrialFunction TrialFunction::with_polynomial(EvenPolynomial poly) const {
    TrialFunction copy = *this;
    if (poly.shift() != center() || poly.degree() != qn_.n) throw DomainError("polynomial does not fit this state");
    copy.poly_ = std::move(poly);
    return copy;
}

namespace {

struct Envelope {
    double value;     // exp(...) / ((B^2+v^2)^{1/4} (c + r)^power)
    double log_slope; // d/dv of its logarithm
};

Envelope envelope(double A, double B, double c, double power, double log_constant, double v) {
    const double v2 = v * v;
    const double r = std::sqrt(B * B + v2);
    const double q = A + (B * B + 3.0) * v2 / 6.0 + v2 * v2 / 3.0;
    const double dq = (B * B + 3.0) * v / 3.0 + 4.0 * v2 * v / 3.0;
    const double exponent = -q / r + log_constant;
    const double dexponent = -dq / r + q * v / (r * r * r);
    const double log_value = exponent - 0.5 * std::log(r) - power * std::log(c + r);
    const double log_slope = dexponent - 0.5 * v / (r * r) - power * (v / r) / (c + r);
    return {std::exp(log_value), log_slope};
}

}  // namespace

ValueSlope TrialFunction::evaluate(double u) const { return evaluate_impl(u, false); }

ValueSlope TrialFunction::evaluate_base(double u) const { return evaluate_impl(u, true); }

ValueSlope TrialFunction::evaluate_impl(double u, bool unit_polynomial) const {
    if (!std::isfinite(u)) throw DomainError("trial function evaluated at non-finite u");
    const double v = u - center();
    const double t = v * v;
    const double pv = unit_polynomial ? 1.0 : poly_.value(t);
    const double dpv = unit_polynomial ? 0.0 : 2.0 * v * poly_.derivative(t);
    const auto& pr = params_;

    if (family_ == TrialFamily::SingleWell) {
        const double power = 2.0 * qn_.n + qn_.p + 0.5;
        const Envelope env = envelope(pr.A, pr.B, pr.B, power, log_constant_, v);
        // m(v) = v^p P(v^2)
        const double m = qn_.p == 1 ? v * pv : pv;
        const double dm = qn_.p == 1 ? pv + v * dpv : dpv;
        return {m * env.value, env.value * (dm + m * env.log_slope)};
    }

    const double power = 2.0 * qn_.n + 0.5;
    const Envelope env = envelope(pr.A, pr.B, pr.alpha * pr.B, power, log_constant_, v);
    const double r = std::sqrt(pr.B * pr.B + t);
    const double num = pr.a * v + pr.b * v * t;
    const double g = num / r;
    const double dg = (pr.a + 3.0 * pr.b * t) / r - num * v / (r * r * r);
    const double d = qn_.p == 0 ? std::cosh(g) : std::sinh(g);
    const double dd = (qn_.p == 0 ? std::sinh(g) : std::cosh(g)) * dg;
    return {pv * env.value * d, env.value * (dpv * d + pv * env.log_slope * d + pv * dd)};
}

double psi_single(const TrialParams& params, const QuantumNumbers& qn, const EvenPolynomial& poly, double u) {
    return TrialFunction(TrialFamily::SingleWell, params, qn, poly).value(u);
}

double psi_double(const TrialParams& params, const QuantumNumbers& qn, const EvenPolynomial& poly, double u) {
    return TrialFunction(TrialFamily::DoubleWell, params, qn, poly).value(u);
}

double psi_prime(TrialFamily which, const TrialParams& params, const QuantumNumbers& qn, const EvenPolynomial& poly,
                 double u) {
    return TrialFunction(which, params, qn, poly).derivative(u);
}

}  // namespace quartic
