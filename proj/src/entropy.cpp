#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "modspace/classify.hpp"
#include "modspace/entropy.hpp"
#include "modspace/errors.hpp"

namespace modspace {

double entropy_poly_Pq(int q, double t) {
    // t^q - 2 t^{q-1} + 1 evaluated as t^{q-1} (t - 2) + 1: one subtraction at
    // the end instead of cancellation between two large powers
    double pw = 1.0;
    for (int i = 0; i < q - 1; ++i) pw *= t;
    return pw * (t - 2.0) + 1.0;
}

EntropyEstimate root_of_Pq(int q, double tol) {
    if (q < 3) throw std::invalid_argument("root_of_Pq: q must be >= 3");
    if (tol <= 0.0) throw std::invalid_argument("root_of_Pq: tol must be positive");
    double lo = 2.0 * (q - 1) / q; // P_q < 0 here
    double hi = 2.0;               // P_q = 1 here
    if (!(entropy_poly_Pq(q, lo) < 0.0))
        throw ConvergenceError("root_of_Pq: bracket lost at lower endpoint");
    long iters = 0;
    while (hi - lo > 0.25 * tol && iters < 200) {
        double mid = 0.5 * (lo + hi);
        (entropy_poly_Pq(q, mid) < 0.0 ? lo : hi) = mid;
        ++iters;
    }
    double r = 0.5 * (lo + hi);
    // one Newton polish; P' = t^{q-2} (q t - 2(q-1))
    double pw = 1.0;
    for (int i = 0; i < q - 2; ++i) pw *= r;
    double deriv = pw * (q * r - 2.0 * (q - 1));
    if (deriv != 0.0) {
        double step = entropy_poly_Pq(q, r) / deriv;
        if (std::fabs(step) < hi - lo) r -= step;
    }

    EntropyEstimate est;
    est.value = std::log(r);
    est.method = EntropyMethod::PolyRoot;
    est.error_bound = (hi - lo) / r + 1e-15;
    est.iterations = iters;
    return est;
}

namespace {

constexpr double kLog2 = 0.6931471805599453;

// least-squares slope of (n, log lap_n) over the index window [first, last]
double ls_slope(const std::vector<double>& loglap, std::size_t first, std::size_t last,
                const std::vector<bool>& use) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (std::size_t i = first; i <= last; ++i) {
        if (!use[i]) continue;
        double x = static_cast<double>(i);
        sx += x;
        sy += loglap[i];
        sxx += x * x;
        sxy += x * loglap[i];
        ++m;
    }
    if (m < 2) return 0.0;
    double denom = m * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return (m * sxy - sx * sy) / denom;
}

} // namespace

EntropyEstimate lap_entropy(const QuadMap& f, int n_max, std::size_t budget,
                            const Config& cfg) {
    if (n_max < 2) throw std::invalid_argument("lap_entropy: n_max must be >= 2");
    EntropyEstimate est;
    est.method = EntropyMethod::LapCount;

    Classification cls = classify_real(f, cfg);
    if (cls.cls == RealDynamicsClass::CoveringDegPlus2 ||
        cls.cls == RealDynamicsClass::CoveringDegMinus2) {
        est.value = kLog2; // two-sheeted covering: lap(f^n) = 2^n exactly
        return est;
    }
    if (cls.cls == RealDynamicsClass::MonotoneIncreasing ||
        cls.cls == RealDynamicsClass::MonotoneDecreasing) {
        est.value = 0.0;
        return est;
    }

    IntervalRestriction r = restrict_to_interval(f, cfg);
    if (r.turning.empty()) {
        // the restriction is a homeomorphism of the interval: laps never grow
        est.value = 0.0;
        return est;
    }

    // Each cell of the monotonicity partition of g^n is tracked by its forward
    // image interval [a,b] = g^n(cell).  A cell of g^{n+1} arises by cutting at
    // the turning points of g strictly inside (a,b); cutting by preimage
    // COORDINATES instead is hopeless in doubles, because on strongly expanding
    // maps genuinely distinct preimages collapse below machine resolution.
    const double span = r.hi - r.lo;
    const double btol = cfg.tol_identity * std::max(1.0, span);

    struct Lap {
        double a, b;
    };
    std::vector<double> grid;
    grid.push_back(r.lo);
    for (double t : r.turning) grid.push_back(t);
    grid.push_back(r.hi);
    auto gval = [&](double x) { return r.g.eval_real(x).value().real(); };
    std::vector<Lap> laps;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double ga = gval(grid[i]);
        double gb = gval(grid[i + 1]);
        laps.push_back({std::min(ga, gb), std::max(ga, gb)});
    }

    std::vector<double> loglap; // loglap[k] = log lap(g^{k+1})
    loglap.push_back(std::log(static_cast<double>(laps.size())));

    int n = 1;
    for (; n < n_max; ++n) {
        std::vector<Lap> next;
        next.reserve(laps.size() * 2);
        for (const Lap& lap : laps) {
            double splits[2];
            int k = 0;
            for (double t : r.turning) { // sorted, at most 2
                if (t > lap.a + btol && t < lap.b - btol)
                    splits[k++] = t;
                else if (t > lap.a - btol && t < lap.b + btol)
                    est.collision_flag = true; // turning point at a cell-image boundary
            }
            double prev = lap.a;
            double gprev = gval(prev);
            for (int i = 0; i < k; ++i) {
                double gs = gval(splits[i]);
                next.push_back({std::min(gprev, gs), std::max(gprev, gs)});
                gprev = gs;
            }
            double gb = gval(lap.b);
            next.push_back({std::min(gprev, gb), std::max(gprev, gb)});
        }
        laps.swap(next);
        loglap.push_back(std::log(static_cast<double>(laps.size())));
        if (laps.size() > budget) {
            est.budget_exhausted = true;
            ++n;
            break;
        }
    }
    est.iterations = n;

    const std::size_t N = loglap.size();
    if (N < 3) {
        est.value = loglap.back() / static_cast<double>(N);
        est.error_bound = kLog2;
        return est;
    }

    // least squares over the last half, with one outlier-rejection pass on the
    // one-step increments (3 x median absolute deviation)
    std::size_t first = N / 2, last = N - 1;
    std::vector<double> inc;
    for (std::size_t i = first; i < last; ++i) inc.push_back(loglap[i + 1] - loglap[i]);
    std::vector<bool> use(N, true);
    if (inc.size() >= 4) {
        std::vector<double> tmp = inc;
        std::sort(tmp.begin(), tmp.end());
        double med = tmp[tmp.size() / 2];
        for (double& v : tmp) v = std::fabs(v - med);
        std::sort(tmp.begin(), tmp.end());
        double mad = tmp[tmp.size() / 2];
        if (mad > 0.0)
            for (std::size_t i = 0; i < inc.size(); ++i)
                if (std::fabs(inc[i] - med) > 3.0 * mad) use[first + i + 1] = false;
    }
    est.value = std::max(0.0, ls_slope(loglap, first, last, use));

    // spread of the one-step slopes over the last quarter
    std::size_t qfirst = (3 * N) / 4;
    if (qfirst >= last) qfirst = last - 1;
    double lo_inc = 1e300, hi_inc = -1e300;
    for (std::size_t i = qfirst; i < last; ++i) {
        double d = loglap[i + 1] - loglap[i];
        lo_inc = std::min(lo_inc, d);
        hi_inc = std::max(hi_inc, d);
    }
    est.error_bound = (hi_inc - lo_inc) + cfg.lap_error_floor;
    if (est.budget_exhausted) est.error_bound = std::max(est.error_bound, 0.05);
    return est;
}

} // namespace modspace
