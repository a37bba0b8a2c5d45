#include "modspace/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace modspace {

namespace {

// One complex Newton step on the original polynomial; skipped when the
// derivative is too small to trust (multiple-root neighborhood).
Complex polish(const std::vector<double>& coeffs, Complex z) {
    std::vector<double> deriv;
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        deriv.push_back(coeffs[k] * static_cast<double>(k));
    Complex p = eval_poly(coeffs, z);
    Complex d = eval_poly(deriv, z);
    if (std::abs(d) < 1e-12 * (1.0 + std::abs(p))) return z;
    return z - p / d;
}

} // namespace

QuadraticRoots solve_quadratic(double a, double b, double c) {
    QuadraticRoots out;
    double scale = std::max({std::fabs(a), std::fabs(b), std::fabs(c)});
    if (scale == 0.0) return out; // identically zero: caller decides what that means
    if (std::fabs(a) <= 1e-14 * scale) {
        out.roots_at_infinity = 1;
        if (std::fabs(b) <= 1e-14 * scale) {
            out.roots_at_infinity = 2;
            return out;
        }
        out.finite.push_back(Complex(-c / b, 0.0));
        return out;
    }
    double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
        // stable form: avoid cancellation in the small root
        double sq = std::sqrt(disc);
        double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
        double r0 = q / a;
        double r1 = (q != 0.0) ? c / q : -b / a - r0;
        if (r0 > r1) std::swap(r0, r1);
        out.finite.push_back(Complex(r0, 0.0));
        out.finite.push_back(Complex(r1, 0.0));
    } else {
        double re = -b / (2.0 * a);
        double im = std::sqrt(-disc) / (2.0 * a);
        im = std::fabs(im);
        out.finite.push_back(Complex(re, -im));
        out.finite.push_back(Complex(re, im));
    }
    return out;
}

CubicRoots solve_cubic(double c3, double c2, double c1, double c0) {
    CubicRoots out;
    double scale = std::max({std::fabs(c3), std::fabs(c2), std::fabs(c1), std::fabs(c0)});
    if (scale == 0.0) return out;
    if (std::fabs(c3) <= 1e-14 * scale) {
        QuadraticRoots q = solve_quadratic(c2, c1, c0);
        out.finite = q.finite;
        out.roots_at_infinity = 1 + q.roots_at_infinity;
        return out;
    }

    // normalized: x^3 + a x^2 + b x + c
    double a = c2 / c3, b = c1 / c3, c = c0 / c3;
    // depressed: t^3 + p t + q with x = t - a/3
    double p = b - a * a / 3.0;
    double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    double shift = -a / 3.0;
    double disc = (q * q) / 4.0 + (p * p * p) / 27.0;

    std::vector<Complex> roots;
    if (disc > 0.0) {
        // one real root, conjugate complex pair
        double sq = std::sqrt(disc);
        double u = std::cbrt(-q / 2.0 + sq);
        double v = std::cbrt(-q / 2.0 - sq);
        double t0 = u + v;
        roots.push_back(Complex(t0 + shift, 0.0));
        double re = -t0 / 2.0 + shift;
        double im = std::fabs(u - v) * std::sqrt(3.0) / 2.0;
        roots.push_back(Complex(re, -im));
        roots.push_back(Complex(re, im));
    } else if (p == 0.0 && q == 0.0) {
        roots.assign(3, Complex(shift, 0.0));
    } else {
        // three real roots: trigonometric method
        double r = std::sqrt(-p * p * p / 27.0);
        double arg = std::clamp(-q / (2.0 * r), -1.0, 1.0);
        double phi = std::acos(arg);
        double m = 2.0 * std::sqrt(-p / 3.0);
        for (int k = 0; k < 3; ++k)
            roots.push_back(Complex(m * std::cos((phi + 2.0 * M_PI * k) / 3.0) + shift, 0.0));
        std::sort(roots.begin(), roots.end(),
                  [](Complex lhs, Complex rhs) { return lhs.real() < rhs.real(); });
    }

    std::vector<double> coeffs = {c0, c1, c2, c3};
    for (auto& z : roots) {
        z = polish(coeffs, z);
        if (std::fabs(z.imag()) < 1e-14 * (1.0 + std::fabs(z.real())))
            z = Complex(z.real(), z.imag()); // keep tiny imag; callers decide realness
    }
    out.finite = roots;
    return out;
}

double largest_real_root(const CubicRoots& r, double imag_tol) {
    double best = std::numeric_limits<double>::quiet_NaN();
    double best_abs = -1.0;
    for (const Complex& z : r.finite) {
        if (std::fabs(z.imag()) > imag_tol * (1.0 + std::abs(z))) continue;
        if (std::fabs(z.real()) > best_abs) {
            best_abs = std::fabs(z.real());
            best = z.real();
        }
    }
    return best;
}

double resultant_quadratics(double a2, double a1, double a0,
                            double b2, double b1, double b0) {
    // det of the Sylvester matrix
    //   [a2 a1 a0  0]
    //   [ 0 a2 a1 a0]
    //   [b2 b1 b0  0]
    //   [ 0 b2 b1 b0]
    // expanded form: (a2 b0 - a0 b2)^2 - (a2 b1 - a1 b2)(a1 b0 - a0 b1)
    double m = a2 * b0 - a0 * b2;
    return m * m - (a2 * b1 - a1 * b2) * (a1 * b0 - a0 * b1);
}

} // namespace modspace
