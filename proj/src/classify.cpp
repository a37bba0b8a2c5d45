#include "modspace/classify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "modspace/errors.hpp"

namespace modspace {

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap_angle(double t) { // into (-pi, pi]
    t = std::fmod(t, 2.0 * kPi);
    if (t <= -kPi) t += 2.0 * kPi;
    if (t > kPi) t -= 2.0 * kPi;
    return t;
}

double ccw_from(double base, double t) { // offset of t above base, in [0, 2pi)
    double d = std::fmod(t - base, 2.0 * kPi);
    if (d < 0.0) d += 2.0 * kPi;
    return d;
}

double angular_gap(double a, double b) { // unsigned circle distance
    double d = std::fabs(wrap_angle(a - b));
    return d;
}

// The image arc of f on the real circle: a closed arc bounded by the two
// critical values.  Stored as ccw sweep from angle `ang_a` to `ang_a + len`.
struct ArcInfo {
    double ang_a = 0.0; // angle of the ccw-first endpoint
    double len = 0.0;   // ccw length, in (0, 2pi)
    SpherePoint end_a, end_b;
};

bool arc_contains(const ArcInfo& arc, double theta, double slack) {
    double off = ccw_from(arc.ang_a, theta);
    if (off <= arc.len + slack) return true;
    return 2.0 * kPi - off <= slack; // just below the start endpoint
}

ArcInfo image_arc(const QuadMap& f, const Config& cfg) {
    std::array<SpherePoint, 2> crit = critical_points(f);
    SpherePoint v0 = f.eval(crit[0]);
    SpherePoint v1 = f.eval(crit[1]);
    if (chordal_dist(v0, v1) < cfg.tol_geometry)
        throw DegenerateMapError("image arc: critical values coincide for " + f.describe());

    double a0 = circle_angle(v0);
    double a1 = circle_angle(v1);

    // vote with the sample image farthest from both endpoints
    double best_score = -1.0;
    double best_theta = 0.0;
    for (int k = 0; k < 24; ++k) {
        double theta = -kPi + (2.0 * kPi * (k + 0.5)) / 24.0;
        SpherePoint img = f.eval(SpherePoint::from_real(std::tan(theta / 2.0)));
        double t = circle_angle(img);
        double score = std::min(angular_gap(t, a0), angular_gap(t, a1));
        if (score > best_score) {
            best_score = score;
            best_theta = t;
        }
    }

    ArcInfo arc;
    if (ccw_from(a0, best_theta) <= ccw_from(a0, a1)) {
        arc.ang_a = a0;
        arc.len = ccw_from(a0, a1);
        arc.end_a = v0;
        arc.end_b = v1;
    } else {
        arc.ang_a = a1;
        arc.len = ccw_from(a1, a0);
        arc.end_a = v1;
        arc.end_b = v0;
    }
    return arc;
}

} // namespace

const char* to_string(RealDynamicsClass c) {
    switch (c) {
        case RealDynamicsClass::CoveringDegPlus2: return "covering_deg_plus2";
        case RealDynamicsClass::CoveringDegMinus2: return "covering_deg_minus2";
        case RealDynamicsClass::MonotoneIncreasing: return "monotone_increasing";
        case RealDynamicsClass::MonotoneDecreasing: return "monotone_decreasing";
        case RealDynamicsClass::Unimodal: return "unimodal";
        case RealDynamicsClass::BimodalPlusMinusPlus: return "bimodal_+-+";
        case RealDynamicsClass::BimodalMinusPlusMinus: return "bimodal_-+-";
    }
    return "?";
}

IntervalRestriction restrict_to_interval(const QuadMap& f, const Config& cfg) {
    if (!has_real_critical_points(f))
        throw std::invalid_argument("restrict_to_interval: map is a circle covering");
    ArcInfo arc = image_arc(f, cfg);

    // rotate infinity (angle pi) out of the way when it is in or near the arc
    constexpr double kRotMargin = 0.1;
    Mobius chart = Mobius::identity();
    if (arc_contains(arc, kPi, kRotMargin)) {
        double gap = 2.0 * kPi - arc.len; // ccw size of the complement
        double pole_angle = wrap_angle(arc.ang_a + arc.len + 0.5 * gap);
        if (std::fabs(std::fabs(pole_angle) - kPi) < 1e-9)
            throw DegenerateMapError("restrict_to_interval: cannot place rotation pole");
        chart = Mobius::pole_to_infinity(std::tan(pole_angle / 2.0));
    }

    IntervalRestriction out{conjugate(f, chart), chart, 0.0, 0.0, {}};
    double e0 = out.chart.apply(arc.end_a).value().real();
    double e1 = out.chart.apply(arc.end_b).value().real();
    out.lo = std::min(e0, e1);
    out.hi = std::max(e0, e1);
    if (!(out.hi > out.lo))
        throw DegenerateMapError("restrict_to_interval: empty interval for " + f.describe());

    double margin = 1e-9 * (out.hi - out.lo);
    for (const SpherePoint& c : critical_points(out.g)) {
        if (c.is_infinity()) continue;
        Complex z = c.value();
        if (z.imag() != 0.0) continue;
        double x = z.real();
        if (x > out.lo + margin && x < out.hi - margin) out.turning.push_back(x);
    }
    std::sort(out.turning.begin(), out.turning.end());
    return out;
}

Classification classify_real(const QuadMap& f, const Config& cfg) {
    Classification out{RealDynamicsClass::Unimodal};
    try {
        out.on_symmetry_locus = on_symmetry_locus(moduli_point(f, cfg), cfg);
    } catch (const std::exception&) {
        out.on_symmetry_locus = false; // moduli unreadable; locus test is best-effort
    }

    if (!has_real_critical_points(f)) {
        // two-sheeted covering of the circle; orientation is constant
        for (double x : {0.37, -0.61, 1.91, -2.45, 0.05, 7.3}) {
            int s = circle_orientation(f, SpherePoint::from_real(x), 1e-12);
            if (s > 0) { out.cls = RealDynamicsClass::CoveringDegPlus2; return out; }
            if (s < 0) { out.cls = RealDynamicsClass::CoveringDegMinus2; return out; }
        }
        throw DegenerateMapError("classify_real: covering orientation unreadable");
    }

    ArcInfo arc = image_arc(f, cfg);
    int inside = 0;
    for (const SpherePoint& c : critical_points(f)) {
        double theta = circle_angle(c);
        double off = ccw_from(arc.ang_a, theta);
        bool in_closed = off <= arc.len + cfg.tol_geometry ||
                         2.0 * kPi - off <= cfg.tol_geometry;
        if (in_closed) {
            ++inside;
            double to_end = std::min({angular_gap(theta, arc.ang_a),
                                      angular_gap(theta, wrap_angle(arc.ang_a + arc.len))});
            if (to_end < cfg.tol_geometry) out.boundary_ambiguity = true;
        }
    }

    IntervalRestriction r = restrict_to_interval(f, cfg);
    auto real_deriv = [&](double x) {
        double n = (r.g.n2() * x + r.g.n1()) * x + r.g.n0();
        double d = (r.g.d2() * x + r.g.d1()) * x + r.g.d0();
        double dn = 2.0 * r.g.n2() * x + r.g.n1();
        double dd = 2.0 * r.g.d2() * x + r.g.d1();
        return (dn * d - n * dd) / (d * d);
    };
    double first_cut = r.turning.empty() ? r.hi : r.turning.front();
    double first_lap_sample = 0.5 * (r.lo + first_cut);
    bool starts_up = real_deriv(first_lap_sample) > 0.0;

    if (inside == 0) {
        out.cls = starts_up ? RealDynamicsClass::MonotoneIncreasing
                            : RealDynamicsClass::MonotoneDecreasing;
    } else if (inside == 1) {
        out.cls = RealDynamicsClass::Unimodal;
    } else {
        out.cls = starts_up ? RealDynamicsClass::BimodalPlusMinusPlus
                            : RealDynamicsClass::BimodalMinusPlusMinus;
    }
    return out;
}

} // namespace modspace
