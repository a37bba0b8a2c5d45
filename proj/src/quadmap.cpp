#include "modspace/quadmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "modspace/errors.hpp"

namespace modspace {

namespace {

// Structural validity thresholds (relative to normalized coefficients).
// These are not tunable tolerances: maps this close to degenerate have no
// reliable degree-2 dynamics in double precision.
constexpr double kDegreeTol = 1e-12;     // min |n2| or |d2|
constexpr double kSharedRootTol = 1e-10; // min chordal gap between num and den roots
constexpr double kPartTol = 1e-14;       // min per-part coefficient scale

// (P' Q - P Q') / Q^2 for quadratics P, Q (high-first coefficient triples).
Complex deriv_ratio(const std::array<double, 3>& P, const std::array<double, 3>& Q,
                    Complex x) {
    Complex p = (P[0] * x + P[1]) * x + P[2];
    Complex q = (Q[0] * x + Q[1]) * x + Q[2];
    Complex dp = 2.0 * P[0] * x + P[1];
    Complex dq = 2.0 * Q[0] * x + Q[1];
    return (dp * q - p * dq) / (q * q);
}

} // namespace

QuadMap QuadMap::create(double n2, double n1, double n0,
                        double d2, double d1, double d0) {
    std::array<double, 6> c = {n2, n1, n0, d2, d1, d0};
    for (double v : c)
        if (!std::isfinite(v))
            throw std::invalid_argument("QuadMap: non-finite coefficient");

    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0)
        throw std::invalid_argument("QuadMap: all coefficients zero");

    // normalize: pivot on the first coefficient of maximal modulus -> +1
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < 6; ++i)
        if (std::fabs(c[i]) > std::fabs(c[pivot])) pivot = i;
    double piv = c[pivot];
    for (double& v : c) v /= piv;

    double num_scale = std::max({std::fabs(c[0]), std::fabs(c[1]), std::fabs(c[2])});
    double den_scale = std::max({std::fabs(c[3]), std::fabs(c[4]), std::fabs(c[5])});
    if (num_scale < kPartTol)
        throw std::invalid_argument("QuadMap: numerator is (numerically) zero");
    if (den_scale < kPartTol)
        throw std::invalid_argument("QuadMap: denominator is (numerically) zero");

    if (std::max(std::fabs(c[0]), std::fabs(c[3])) < kDegreeTol)
        throw std::invalid_argument("QuadMap: effective degree below 2");

    // common-root test in sphere geometry: the normalized resultant can be
    // astronomically small for skewed-but-valid coefficient vectors, so compare
    // the root sets directly instead
    auto sphere_roots = [](double a2, double a1, double a0) {
        QuadraticRoots qr = solve_quadratic(a2, a1, a0);
        std::vector<SpherePoint> pts;
        for (const Complex& z : qr.finite) pts.push_back(SpherePoint::from_complex(z));
        for (int i = 0; i < qr.roots_at_infinity; ++i) pts.push_back(SpherePoint::infinity());
        return pts;
    };
    double root_gap = 1e300;
    for (const SpherePoint& zn : sphere_roots(c[0], c[1], c[2]))
        for (const SpherePoint& zd : sphere_roots(c[3], c[4], c[5]))
            root_gap = std::min(root_gap, chordal_dist(zn, zd));
    if (root_gap < kSharedRootTol)
        throw std::invalid_argument("QuadMap: numerator and denominator share a root");

    return QuadMap(c);
}

std::vector<double> QuadMap::real_preimages(double y) const {
    QuadraticRoots r = solve_quadratic(c_[0] - y * c_[3],
                                       c_[1] - y * c_[4],
                                       c_[2] - y * c_[5]);
    std::vector<double> out;
    for (const Complex& z : r.finite)
        if (z.imag() == 0.0) out.push_back(z.real());
    return out;
}

double QuadMap::coeff_distance(const QuadMap& other) const {
    double d = 0.0;
    for (std::size_t i = 0; i < 6; ++i)
        d = std::max(d, std::fabs(c_[i] - other.c_[i]));
    return d;
}

std::string QuadMap::describe() const {
    char buf[220];
    std::snprintf(buf, sizeof buf, "(%.12g z^2 + %.12g z + %.12g)/(%.12g z^2 + %.12g z + %.12g)",
                  c_[0], c_[1], c_[2], c_[3], c_[4], c_[5]);
    return buf;
}

ChartDeriv chart_derivative(const QuadMap& f, const SpherePoint& p) {
    ChartDeriv out;
    std::array<double, 3> N, D;
    Complex x;
    if (p.in_unit_chart()) {
        x = p.a / p.b;
        N = {f.n2(), f.n1(), f.n0()};
        D = {f.d2(), f.d1(), f.d0()};
    } else {
        // w = 1/z chart: f(1/w) has the coefficient order reversed
        out.in_wchart = true;
        x = p.b / p.a;
        N = {f.n0(), f.n1(), f.n2()};
        D = {f.d0(), f.d1(), f.d2()};
    }
    SpherePoint q = f.eval(p);
    if (q.in_unit_chart()) {
        out.lambda = deriv_ratio(N, D, x);
    } else {
        out.out_wchart = true;
        out.lambda = deriv_ratio(D, N, x); // output coordinate is D/N
    }
    return out;
}

int circle_orientation(const QuadMap& f, const SpherePoint& p, double tol) {
    ChartDeriv d = chart_derivative(f, p);
    double s = d.lambda.real();
    if (std::fabs(s) <= tol) return 0;
    int sign = (s > 0.0) ? 1 : -1;
    if (d.in_wchart) sign = -sign;  // the reciprocal chart reverses the circle
    if (d.out_wchart) sign = -sign;
    return sign;
}

std::array<SpherePoint, 2> critical_points(const QuadMap& f) {
    // Wronskian num' den - num den' collapses to a quadratic built from the
    // 2x2 minors of the coefficient matrix.
    double w2 = f.n2() * f.d1() - f.n1() * f.d2();
    double w1 = 2.0 * (f.n2() * f.d0() - f.n0() * f.d2());
    double w0 = f.n1() * f.d0() - f.n0() * f.d1();
    QuadraticRoots r = solve_quadratic(w2, w1, w0);

    std::vector<SpherePoint> pts;
    for (const Complex& z : r.finite) pts.push_back(SpherePoint::from_complex(z));
    for (int k = 0; k < r.roots_at_infinity; ++k) pts.push_back(SpherePoint::infinity());
    if (pts.size() != 2)
        throw DegenerateMapError("critical points: Wronskian degenerated for " + f.describe());

    // deterministic order: real ascending with infinity last, else by Im
    bool real_pair = r.finite.size() < 2 || r.finite[0].imag() == 0.0;
    if (real_pair) {
        std::sort(pts.begin(), pts.end(), [](const SpherePoint& a, const SpherePoint& b) {
            if (a.is_infinity()) return false;
            if (b.is_infinity()) return true;
            return a.value().real() < b.value().real();
        });
    } else {
        std::sort(pts.begin(), pts.end(), [](const SpherePoint& a, const SpherePoint& b) {
            return a.value().imag() < b.value().imag();
        });
    }
    return {pts[0], pts[1]};
}

bool has_real_critical_points(const QuadMap& f) {
    double w2 = f.n2() * f.d1() - f.n1() * f.d2();
    double w1 = 2.0 * (f.n2() * f.d0() - f.n0() * f.d2());
    double w0 = f.n1() * f.d0() - f.n0() * f.d1();
    if (w2 == 0.0) return true; // degree drop: a critical point sits at infinity
    return w1 * w1 - 4.0 * w2 * w0 >= 0.0;
}

QuadMap conjugate(const QuadMap& f, const Mobius& g) {
    if (g.det() == 0.0) throw std::invalid_argument("conjugate: singular transformation");
    // g o f o g^{-1} on homogeneous pairs: substitute (z,w) = g^{-1}(u,v) into
    // the forms N, D, then recombine through g.
    const double A = g.m[1][1], B = -g.m[0][1]; // z = A u + B v   (adjugate of g)
    const double C = -g.m[1][0], Dm = g.m[0][0]; // w = C u + D v

    auto subst = [&](double p2, double p1, double p0) {
        // p2 z^2 + p1 z w + p0 w^2 with the substitution above
        return std::array<double, 3>{
            p2 * A * A + p1 * A * C + p0 * C * C,
            2.0 * p2 * A * B + p1 * (A * Dm + B * C) + 2.0 * p0 * C * Dm,
            p2 * B * B + p1 * B * Dm + p0 * Dm * Dm};
    };
    std::array<double, 3> N = subst(f.n2(), f.n1(), f.n0());
    std::array<double, 3> D = subst(f.d2(), f.d1(), f.d0());

    return QuadMap::create(g.m[0][0] * N[0] + g.m[0][1] * D[0],
                           g.m[0][0] * N[1] + g.m[0][1] * D[1],
                           g.m[0][0] * N[2] + g.m[0][1] * D[2],
                           g.m[1][0] * N[0] + g.m[1][1] * D[0],
                           g.m[1][0] * N[1] + g.m[1][1] * D[1],
                           g.m[1][0] * N[2] + g.m[1][1] * D[2]);
}

QuadMap normalize_center_form(const QuadMap& m, int c0_index) {
    if (c0_index < 0 || c0_index > 1)
        throw std::invalid_argument("normalize_center_form: c0_index must be 0 or 1");
    std::array<SpherePoint, 2> crit = critical_points(m);
    const double real_tol = 1e-9;
    if (!crit[0].is_real(real_tol) || !crit[1].is_real(real_tol))
        throw std::invalid_argument("normalize_center_form: critical points are not real");

    // Step 1: a real Moebius moving the chosen critical point to 0.
    SpherePoint c0 = crit[c0_index];
    Mobius pre = c0.is_infinity()
                     ? Mobius{{{{0.0, -1.0}, {1.0, 0.0}}}} // z -> -1/z
                     : Mobius::translation(-c0.value().real());
    QuadMap g = conjugate(m, pre);

    // Step 2: fixed points of g solve d2 z^3 + (d1-n2) z^2 + (d0-n1) z - n0 = 0
    // (plus the point at infinity when d2 = 0).  The form needs exactly one
    // real fixed point and a non-real conjugate pair.
    CubicRoots fr = solve_cubic(g.d2(), g.d1() - g.n2(), g.d0() - g.n1(), -g.n0());
    Complex r{0.0, 0.0};
    int n_real = fr.roots_at_infinity; // infinity counts as a real fixed point
    int n_pair = 0;
    for (const Complex& z : fr.finite) {
        if (std::fabs(z.imag()) <= real_tol * (1.0 + std::abs(z))) {
            ++n_real;
        } else {
            ++n_pair;
            if (z.imag() > 0.0) r = z;
        }
    }
    if (n_real != 1 || n_pair != 2)
        throw std::invalid_argument(
            "normalize_center_form: fixed points are not one real point plus a "
            "conjugate pair");

    // Step 3: T(z) = z/(uz+v) fixes 0 and sends r, conj(r) to +-i.
    double u = -r.real() / r.imag();
    double v = std::norm(r) / r.imag();
    Mobius T{{{{1.0, 0.0}, {u, v}}}};
    return conjugate(g, T);
}

} // namespace modspace
