#pragma once

#include <array>
#include <complex>
#include <vector>

namespace modspace {

using Complex = std::complex<double>;

// Roots of a*x^2 + b*x + c with real coefficients; complex roots come in a
// conjugate pair.  Degenerate leading coefficient drops the degree: the lost
// roots are reported at infinity through `roots_at_infinity`.
struct QuadraticRoots {
    std::vector<Complex> finite;   // 0..2 entries
    int roots_at_infinity = 0;     // 2 - finite.size() when a (and maybe b) vanish
};
QuadraticRoots solve_quadratic(double a, double b, double c);

// Roots of c3*x^3 + c2*x^2 + c1*x + c0, real coefficients.  Closed form
// (Cardano / trigonometric in the three-real-root case) followed by one Newton
// polish per root on the original polynomial.  Leading-coefficient collapse is
// handled the same way as for the quadratic.
struct CubicRoots {
    std::vector<Complex> finite;   // 0..3 entries
    int roots_at_infinity = 0;
};
CubicRoots solve_cubic(double c3, double c2, double c1, double c0);

// Largest-|.| real root of the cubic, or NaN when no real root exists
// (a real cubic of true degree 3 always has one; degenerate inputs may not).
double largest_real_root(const CubicRoots& r, double imag_tol);

// Resultant of the quadratics a2 x^2 + a1 x + a0 and b2 x^2 + b1 x + b0
// (4x4 Sylvester determinant, expanded).  Zero iff they share a root in the
// projective sense.
double resultant_quadratics(double a2, double a1, double a0,
                            double b2, double b1, double b0);

// Horner evaluation helpers used throughout.
inline double eval_poly(const std::vector<double>& coeffs_lowfirst, double x) {
    double acc = 0.0;
    for (auto it = coeffs_lowfirst.rbegin(); it != coeffs_lowfirst.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}
inline Complex eval_poly(const std::vector<double>& coeffs_lowfirst, Complex x) {
    Complex acc = 0.0;
    for (auto it = coeffs_lowfirst.rbegin(); it != coeffs_lowfirst.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

} // namespace modspace
