#pragma once

#include <array>
#include <string>
#include <vector>

#include "modspace/sphere.hpp"

namespace modspace {

// Real quadratic rational map
//     f(z) = (n2 z^2 + n1 z + n0) / (d2 z^2 + d1 z + d0)
// acting on the Riemann sphere.  Construction enforces:
//   * all coefficients finite, not all zero;
//   * effective degree exactly 2 (leading pair not both ~0);
//   * numerator and denominator share no root (resultant bounded away from 0).
// Coefficients are stored normalized: scaled so the largest-|.| coefficient
// (first in field order on ties) equals +1, which makes representations
// comparable and keeps later arithmetic well-scaled.
class QuadMap {
public:
    // throws std::invalid_argument on violated invariants
    static QuadMap create(double n2, double n1, double n0,
                          double d2, double d1, double d0);
    static QuadMap create(const std::array<double, 6>& c) {
        return create(c[0], c[1], c[2], c[3], c[4], c[5]);
    }

    double n2() const { return c_[0]; }
    double n1() const { return c_[1]; }
    double n0() const { return c_[2]; }
    double d2() const { return c_[3]; }
    double d1() const { return c_[4]; }
    double d0() const { return c_[5]; }
    const std::array<double, 6>& coeffs() const { return c_; }

    // f as a pair of homogeneous quadratic forms: [z:w] -> [N(z,w) : D(z,w)]
    SpherePoint eval(const SpherePoint& p) const {
        Complex z = p.a, w = p.b;
        Complex num = (c_[0] * z + c_[1] * w) * z + c_[2] * w * w;
        Complex den = (c_[3] * z + c_[4] * w) * z + c_[5] * w * w;
        return SpherePoint::normalized(num, den);
    }
    SpherePoint eval_real(double x) const { return eval(SpherePoint::from_real(x)); }

    // real preimages of a finite real value y: roots of num(x) - y*den(x)
    // (a real quadratic); roots at infinity are dropped.
    std::vector<double> real_preimages(double y) const;

    // max-abs difference of normalized coefficient vectors; both maps are
    // already scale/sign normalized, so this compares maps up to scaling.
    double coeff_distance(const QuadMap& other) const;

    std::string describe() const; // "(n2 z^2 + ...)/(...)" for logs

private:
    explicit QuadMap(const std::array<double, 6>& c) : c_(c) {}
    std::array<double, 6> c_;
};

// Derivative of f in local sphere charts at p.  `lambda` is d(out)/d(in) where
// each side uses the z-chart when |z| <= 1 and the w = 1/z chart otherwise.
// The w-chart parametrizes the real circle in the reversed direction, so the
// orientation sign of f|_{R u inf} at a real point is
//     sign(Re lambda) * (in_wchart ? -1 : 1) * (out_wchart ? -1 : 1).
// Along a cycle the chart parities telescope away, so the cycle multiplier is
// simply the product of the lambdas.
struct ChartDeriv {
    Complex lambda{0.0, 0.0};
    bool in_wchart = false;
    bool out_wchart = false;
};
ChartDeriv chart_derivative(const QuadMap& f, const SpherePoint& p);

// Orientation of f restricted to the real circle at real point p (+1/-1);
// 0 when the derivative vanishes within `tol`.
int circle_orientation(const QuadMap& f, const SpherePoint& p, double tol = 0.0);

// The two critical points (roots of the Wronskian num' den - num den').
// Deterministic order: real points ascending with infinity last; a non-real
// conjugate pair is ordered by increasing imaginary part.
std::array<SpherePoint, 2> critical_points(const QuadMap& f);

// True when the critical points are real (equivalently the restriction
// f: R u inf -> R u inf is not a double cover).
bool has_real_critical_points(const QuadMap& f);

// g o f o g^{-1} as exact coefficient algebra on the homogeneous forms.
QuadMap conjugate(const QuadMap& f, const Mobius& g);

// Conjugate m by a real Moebius transformation into the center normal form:
// the critical point selected by c0_index (indexing critical_points(m)) goes
// to 0 and the non-real fixed-point pair goes to +-i.  Requires two real
// critical points and a fixed-point configuration of exactly one real point
// plus a conjugate pair; throws std::invalid_argument otherwise.  The
// construction is T(z) = z/(uz + v) with u = -Re r/Im r, v = |r|^2/Im r for
// r the fixed point in the upper half plane (after moving c0 to 0), applied
// after z -> -1/z when c0 is the point at infinity.
QuadMap normalize_center_form(const QuadMap& m, int c0_index);

} // namespace modspace
