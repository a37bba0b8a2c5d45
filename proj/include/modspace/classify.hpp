#pragma once

#include <vector>

#include "modspace/config.hpp"
#include "modspace/moduli_coords.hpp"
#include "modspace/quadmap.hpp"

namespace modspace {

// How f acts on the real circle R u {inf}:
//   * non-real critical points -> two-sheeted covering, degree +-2;
//   * real critical points -> the image is a proper closed arc J bounded by
//     the two critical values, and the class counts the critical points lying
//     in J (closed): 0 monotone, 1 unimodal, 2 bimodal (shape from the sign of
//     the derivative on the leftmost lap of f|_J).
enum class RealDynamicsClass {
    CoveringDegPlus2,
    CoveringDegMinus2,
    MonotoneIncreasing,
    MonotoneDecreasing,
    Unimodal,
    BimodalPlusMinusPlus,
    BimodalMinusPlusMinus,
};

const char* to_string(RealDynamicsClass c);

struct Classification {
    RealDynamicsClass cls;
    // a critical value coincides with a critical point within tolerance, so
    // the closed-arc membership count is a boundary call
    bool boundary_ambiguity = false;
    // the conjugacy class contains a map commuting with z -> -z; entropy on
    // the real circle is multi-valued there
    bool on_symmetry_locus = false;
};

Classification classify_real(const QuadMap& f, const Config& cfg = Config());

// f restricted to its image arc J = f(R u inf), conjugated by an
// orientation-preserving circle rotation so that J becomes a finite interval
// [lo, hi] not containing infinity.  Precondition: real critical points.
struct IntervalRestriction {
    QuadMap g;     // rotated copy of f (g = rot o f o rot^{-1})
    Mobius chart;  // the rotation applied
    double lo = 0.0, hi = 0.0;
    std::vector<double> turning; // critical points of g strictly inside (lo, hi)
};
IntervalRestriction restrict_to_interval(const QuadMap& f, const Config& cfg = Config());

} // namespace modspace
