#include "modspace/moduli_coords.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "modspace/errors.hpp"

namespace modspace {

namespace {

// multiplier at a fixed point given as a sphere point (chart chosen by size)
Complex multiplier_at(const QuadMap& f, const SpherePoint& p) {
    auto ratio = [](const std::array<double, 3>& P, const std::array<double, 3>& Q,
                    Complex x) {
        Complex pv = (P[0] * x + P[1]) * x + P[2];
        Complex qv = (Q[0] * x + Q[1]) * x + Q[2];
        Complex dp = 2.0 * P[0] * x + P[1];
        Complex dq = 2.0 * Q[0] * x + Q[1];
        return (dp * qv - pv * dq) / (qv * qv);
    };
    if (p.in_unit_chart()) {
        return ratio({f.n2(), f.n1(), f.n0()}, {f.d2(), f.d1(), f.d0()}, p.a / p.b);
    }
    // w = 1/z chart: the return map is 1/f(1/w) = revD(w)/revN(w)
    return ratio({f.d0(), f.d1(), f.d2()}, {f.n0(), f.n1(), f.n2()}, p.b / p.a);
}

} // namespace

double FixedPointSet::formula_residual(double guard) const {
    Complex sum = 0.0;
    for (const Complex& mu : multipliers) {
        Complex d = 1.0 - mu;
        if (std::abs(d) < guard) return std::numeric_limits<double>::infinity();
        sum += 1.0 / d;
    }
    return std::abs(sum - 1.0);
}

FixedPointSet fixed_point_data(const QuadMap& f, const Config& cfg) {
    // z*den(z) - num(z) = d2 z^3 + (d1-n2) z^2 + (d0-n1) z - n0
    CubicRoots r = solve_cubic(f.d2(), f.d1() - f.n2(), f.d0() - f.n1(), -f.n0());

    FixedPointSet out;
    std::size_t k = 0;
    for (const Complex& z : r.finite) out.points[k++] = SpherePoint::from_complex(z);
    for (int i = 0; i < r.roots_at_infinity; ++i) out.points[k++] = SpherePoint::infinity();
    if (k != 3)
        throw DegenerateMapError("fixed_point_data: expected three fixed points for " +
                                 f.describe());

    for (std::size_t i = 0; i < 3; ++i)
        out.multipliers[i] = multiplier_at(f, out.points[i]);

    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (chordal_dist(out.points[i], out.points[j]) < cfg.tol_geometry)
                out.parabolic_coincidence = true;
    return out;
}

ModuliPoint moduli_point(const QuadMap& f, const Config& cfg) {
    FixedPointSet fps = fixed_point_data(f, cfg);
    Complex s1 = fps.sigma1(), s2 = fps.sigma2(), s3 = fps.sigma3();

    // conjugation closure of the multiplier set forces real sigmas; allow a
    // modest conditioning factor over the raw identity tolerance
    double tol1 = 10.0 * cfg.tol_identity * (1.0 + std::abs(s1));
    double tol2 = 10.0 * cfg.tol_identity * (1.0 + std::abs(s2));
    if (std::fabs(s1.imag()) > tol1 || std::fabs(s2.imag()) > tol2)
        throw ToleranceError("moduli_point: symmetric functions not real for " +
                             f.describe());

    double tol3 = 10.0 * cfg.tol_identity * (1.0 + std::abs(s1) + std::abs(s3));
    if (std::abs(s3 - (s1 - 2.0)) > tol3)
        throw ToleranceError("moduli_point: sigma3 != sigma1 - 2 for " + f.describe());

    return ModuliPoint{s1.real(), s2.real()};
}

QuadMap expand(const MixedNormalForm& nf) {
    if (nf.mu == 0.0 || !std::isfinite(nf.mu) || !std::isfinite(nf.a))
        throw std::invalid_argument("expand: mu must be finite nonzero, a finite");
    double last = (nf.variant == NormalFormVariant::Plus) ? 1.0 : -1.0;
    return QuadMap::create(1.0, nf.a * nf.mu, last, 0.0, nf.mu, 0.0);
}

ModuliPoint normal_form_moduli(const MixedNormalForm& nf) {
    if (nf.mu == 0.0) throw std::invalid_argument("normal_form_moduli: mu = 0");
    double s = (nf.variant == NormalFormVariant::Plus) ? 1.0 : -1.0;
    double mu = nf.mu;
    double sigma1 = mu * (1.0 - s * nf.a * nf.a) - 2.0 + 4.0 / mu;
    double sigma2 = (mu + 1.0 / mu) * sigma1 - (mu * mu + 2.0 / mu);
    return ModuliPoint{sigma1, sigma2};
}

std::pair<QuadMap, ModuliPoint> from_mixed_normal(const MixedNormalForm& nf,
                                                  const Config& cfg) {
    QuadMap map = expand(nf);
    ModuliPoint closed = normal_form_moduli(nf);
    ModuliPoint via_mult = moduli_point(map, cfg);

    double scale = 1.0 + std::fabs(closed.sigma1) + std::fabs(closed.sigma2);
    double tol = 10.0 * cfg.tol_identity * scale;
    if (std::fabs(closed.sigma1 - via_mult.sigma1) > tol ||
        std::fabs(closed.sigma2 - via_mult.sigma2) > tol)
        throw ToleranceError("from_mixed_normal: closed-form and multiplier routes disagree");
    return {map, closed};
}

namespace {

// real roots of the multiplier cubic z^3 - s1 z^2 + s2 z - (s1 - 2)
std::vector<double> multiplier_cubic_real_roots(const ModuliPoint& pt) {
    CubicRoots r = solve_cubic(1.0, -pt.sigma1, pt.sigma2, -(pt.sigma1 - 2.0));
    std::vector<double> out;
    for (const Complex& z : r.finite)
        if (std::fabs(z.imag()) <= 1e-9 * (1.0 + std::abs(z))) out.push_back(z.real());
    return out;
}

double a_squared_for(const ModuliPoint& pt, double mu) {
    return 1.0 - (pt.sigma1 + 2.0 - 4.0 / mu) / mu;
}

} // namespace

bool on_symmetry_locus(const ModuliPoint& pt, const Config& cfg) {
    for (double mu : multiplier_cubic_real_roots(pt)) {
        if (std::fabs(mu) < 1e-8) continue;
        if (std::fabs(a_squared_for(pt, mu)) < cfg.tol_geometry) return true;
    }
    return false;
}

ModuliInversion invert_moduli(const ModuliPoint& pt, const Config& cfg) {
    ModuliInversion out;
    std::vector<double> roots = multiplier_cubic_real_roots(pt);
    if (roots.empty()) {
        out.reason = "multiplier cubic has no real root";
        return out;
    }
    double mu = 0.0;
    for (double r : roots)
        if (std::fabs(r) > std::fabs(mu)) mu = r;
    if (std::fabs(mu) < 1e-8) {
        out.reason = "all real multiplier roots are ~0 (normal form needs mu != 0)";
        return out;
    }

    double a2 = a_squared_for(pt, mu);
    MixedNormalForm nf;
    nf.mu = mu;
    if (a2 >= 0.0) {
        nf.variant = NormalFormVariant::Plus;
        nf.a = std::sqrt(a2);
    } else {
        nf.variant = NormalFormVariant::Minus;
        nf.a = std::sqrt(-a2);
    }

    out.on_symmetry_locus = on_symmetry_locus(pt, cfg);
    try {
        out.map = expand(nf);
    } catch (const std::invalid_argument& e) {
        out.reason = e.what();
        return out;
    }
    out.nf = nf;
    out.ok = true;
    return out;
}

} // namespace modspace
