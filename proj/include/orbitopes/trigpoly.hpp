#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace orbitopes::trigpoly {

using Vec = Eigen::VectorXd;

/// delta + sum_k a_k cos(k theta) + b_k sin(k theta).
struct TrigPolynomial {
    double delta = 0.0;
    Vec a;  // length d
    Vec b;  // length d

    TrigPolynomial() : a(0), b(0) {}
    TrigPolynomial(double delta_, Vec a_, Vec b_);

    int degree() const { return static_cast<int>(a.size()); }
    double eval(double theta) const;
    double deriv(double theta) const;
    double deriv2(double theta) const;
    /// Coefficient 1-norm |delta| + sum(|a|+|b|), used to scale tolerances.
    double coeff_norm() const;

    static TrigPolynomial constant(double delta);
};

/// Laurent coefficients u_{-d..d} with u_0 = delta, u_k = (a_k - i b_k)/2,
/// u_{-k} = conj(u_k); index k stored at position k + d.
std::vector<std::complex<double>> laurent_coeffs(const TrigPolynomial& r);

/// Rotate the circle: returns R_phi with R_phi(theta) = R(theta + phi).
TrigPolynomial shift(const TrigPolynomial& r, double phi);

struct Extrema {
    double min_value = 0.0;
    double argmin = 0.0;
    double max_value = 0.0;
    double argmax = 0.0;
};

/// Global extrema over [0, 2pi).  Critical points are the unit-circle roots
/// of the derivative's Laurent numerator (companion-matrix eigenvalues),
/// guarded by a 1024-point grid pre-scan and polished by Newton steps.
Extrema extremize(const TrigPolynomial& r);

struct NonnegativityCheck {
    bool nonnegative = false;
    double min_value = 0.0;
    double argmin = 0.0;
};
NonnegativityCheck is_nonnegative(const TrigPolynomial& r, double tol = 1e-9);

struct ComplexPolynomial {
    std::vector<std::complex<double>> coeffs;  // ascending degree
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::complex<double> eval(std::complex<double> z) const;
};

struct NotNonnegativeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IllConditionedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Spectral factorization R(z) = conj(H)(1/z) * H(z) on |z| = 1 of a
/// nonnegative trigonometric polynomial.  H collects the numerator roots
/// inside the unit disc plus one representative of each double root on the
/// circle; leading coefficient normalized real positive.
/// Throws NotNonnegativeError if min(R) < -tol, IllConditionedError if the
/// circle roots cannot be paired within the bracket.
ComplexPolynomial fejer_riesz(const TrigPolynomial& r, double tol = 1e-7,
                              double pairing_eps = 1e-6);

/// |H(e^{i theta})|^2 expanded back into a trigonometric polynomial.
TrigPolynomial squared_modulus_on_circle(const ComplexPolynomial& h);

}  // namespace orbitopes::trigpoly
