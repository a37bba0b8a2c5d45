#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "modspace/poly.hpp"

namespace modspace {

// Point of the Riemann sphere as a normalized homogeneous pair [a : b]
// (value a/b, infinity when b = 0).  Keeping both coordinates means map
// evaluation never divides by a small denominator: normalizing so the larger
// coordinate has modulus 1 is the same as working in the reciprocal chart
// w = 1/z whenever |z| > 1.
struct SpherePoint {
    Complex a{0.0, 0.0}; // numerator coordinate
    Complex b{1.0, 0.0}; // denominator coordinate

    static SpherePoint from_complex(Complex z) { return normalized(z, 1.0); }
    static SpherePoint from_real(double x) { return normalized(Complex(x, 0.0), 1.0); }
    static SpherePoint infinity() { return SpherePoint{Complex(1.0, 0.0), Complex(0.0, 0.0)}; }

    static SpherePoint normalized(Complex num, Complex den) {
        SpherePoint p{num, den};
        p.normalize();
        return p;
    }

    void normalize() {
        double m = std::max(std::abs(a), std::abs(b));
        if (m == 0.0) { a = 0.0; b = 1.0; return; } // never produced by valid maps
        a /= m;
        b /= m;
    }

    bool is_infinity() const { return b == Complex(0.0, 0.0); }
    // finite value; +-inf doubles when at infinity
    Complex value() const { return a / b; }
    bool in_unit_chart() const { return std::abs(a) <= std::abs(b); } // |z| <= 1

    // real up to `tol` in the chart sense (both coordinates can be rotated real)
    bool is_real(double tol) const {
        // [a:b] is real iff a*conj(b) is real
        Complex cross = a * std::conj(b);
        return std::fabs(cross.imag()) <= tol * (std::abs(cross) + 1e-300) ||
               std::abs(cross) <= tol;
    }
};

// Chordal distance |z - w| / sqrt(1+|z|^2) sqrt(1+|w|^2), bounded by 2,
// computed projectively so infinity needs no special case.
inline double chordal_dist(const SpherePoint& p, const SpherePoint& q) {
    double num = std::abs(p.a * q.b - q.a * p.b);
    double np = std::sqrt(std::norm(p.a) + std::norm(p.b));
    double nq = std::sqrt(std::norm(q.a) + std::norm(q.b));
    return 2.0 * num / (np * nq);
}

// Angle coordinate of a point of the real circle R u {inf}: theta = 2*atan(x),
// continuous across infinity (theta(inf) = +-pi).  Monotone increasing in x,
// so cyclic order on the circle is cyclic order of angles.
inline double circle_angle(const SpherePoint& p) {
    // use real parts of a representative rotated to be real
    Complex cross = p.a * std::conj(p.b);
    double x, y;
    if (std::abs(p.b) > std::abs(p.a)) {
        x = cross.real() / std::norm(p.b); // = Re(a/b)
        y = 1.0;
    } else {
        x = 1.0;
        y = (std::abs(p.a) == 0.0) ? 1.0 : cross.real() / std::norm(p.a); // = Re(b/a)
    }
    // 2*atan2(x, y) with (x,y) ~ (-x,-y) giving the same angle mod 2pi
    return 2.0 * std::atan2(x, y);
}
inline double circle_angle(double x) { return 2.0 * std::atan(x); }

// Real Moebius transformation z -> (m00 z + m01)/(m10 z + m11), det != 0.
// Acts linearly on homogeneous pairs, so the sphere action is exact.
struct Mobius {
    std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};

    static Mobius identity() { return Mobius{}; }
    static Mobius translation(double t) { return Mobius{{{{1.0, t}, {0.0, 1.0}}}}; }
    static Mobius scaling(double s) { return Mobius{{{{s, 0.0}, {0.0, 1.0}}}}; }
    // orientation-preserving rotation of the circle taking `pole` to infinity:
    // z -> -1/(z - pole)
    static Mobius pole_to_infinity(double pole) {
        return Mobius{{{{0.0, -1.0}, {1.0, -pole}}}};
    }
    static Mobius negation() { return Mobius{{{{-1.0, 0.0}, {0.0, 1.0}}}}; }

    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

    Mobius inverse() const {
        // adjugate; projective action ignores the 1/det factor
        return Mobius{{{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}}};
    }

    Mobius compose(const Mobius& rhs) const { // (*this) after rhs
        Mobius out;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                out.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
        return out;
    }

    SpherePoint apply(const SpherePoint& p) const {
        return SpherePoint::normalized(m[0][0] * p.a + m[0][1] * p.b,
                                       m[1][0] * p.a + m[1][1] * p.b);
    }
    double apply_real(double x) const {
        return (m[0][0] * x + m[0][1]) / (m[1][0] * x + m[1][1]);
    }
};

} // namespace modspace
