#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "modspace/config.hpp"
#include "modspace/quadmap.hpp"

namespace modspace {

// Point of the real moduli plane: elementary symmetric functions
// (sigma1, sigma2) of the three fixed-point multipliers.  sigma3 is not
// independent: sigma3 = sigma1 - 2 for every quadratic rational map.
struct ModuliPoint {
    double sigma1 = 0.0;
    double sigma2 = 0.0;
};

// The three fixed points with multipliers.  For a real map the set is closed
// under conjugation.  When no multiplier equals 1 the multipliers satisfy
//     sum_i 1/(1 - mu_i) = 1.
struct FixedPointSet {
    std::array<SpherePoint, 3> points;
    std::array<Complex, 3> multipliers;
    bool parabolic_coincidence = false; // two fixed points within tolerance

    Complex sigma1() const { return multipliers[0] + multipliers[1] + multipliers[2]; }
    Complex sigma2() const {
        return multipliers[0] * multipliers[1] + multipliers[0] * multipliers[2] +
               multipliers[1] * multipliers[2];
    }
    Complex sigma3() const { return multipliers[0] * multipliers[1] * multipliers[2]; }

    // |sum 1/(1-mu) - 1|; infinity when some mu is within `guard` of 1
    double formula_residual(double guard = 1e-12) const;
};

// Fixed points solve z*den(z) - num(z) = 0 (cubic; degree drops put fixed
// points at infinity).  Multipliers are computed in the chart where the fixed
// point is not large: f'(z) below |z| = 1, else d(1/f(1/w))/dw at w = 1/z.
FixedPointSet fixed_point_data(const QuadMap& f, const Config& cfg = Config());

// (sigma1, sigma2) from the multipliers.  Verifies that both are real and that
// sigma3 = sigma1 - 2 within tolerance; throws ToleranceError otherwise.
ModuliPoint moduli_point(const QuadMap& f, const Config& cfg = Config());

// Mixed normal form
//     Plus:  z -> (1/mu)(z + 1/z) + a     (critical points +-1)
//     Minus: z -> (1/mu)(z - 1/z) + a     (critical points +-i, real circle
//                                          double cover)
// Every real quadratic rational map away from degenerate strata is conjugate
// to one of these; infinity is a fixed point with multiplier mu.
enum class NormalFormVariant { Plus, Minus };

struct MixedNormalForm {
    NormalFormVariant variant = NormalFormVariant::Plus;
    double mu = 2.0; // != 0
    double a = 0.0;
};

// Expansion to coefficients: (z^2 + a*mu*z +- 1)/(mu*z).
QuadMap expand(const MixedNormalForm& nf);

// Closed-form moduli coordinates:
//     sigma1 = mu(1 - s*a^2) - 2 + 4/mu      (s = +1 Plus, -1 Minus)
//     sigma2 = (mu + 1/mu) sigma1 - (mu^2 + 2/mu)
ModuliPoint normal_form_moduli(const MixedNormalForm& nf);

// Expansion plus closed-form moduli, cross-checked against the multiplier
// route within tolerance (ToleranceError on disagreement).
std::pair<QuadMap, ModuliPoint> from_mixed_normal(const MixedNormalForm& nf,
                                                  const Config& cfg = Config());

// Inversion moduli -> normal form: mu is the largest-|.| real root of the
// multiplier cubic z^3 - sigma1 z^2 + sigma2 z - (sigma1 - 2), then
// a^2 = 1 - (sigma1 + 2 - 4/mu)/mu decides the variant (negative -> Minus).
struct ModuliInversion {
    bool ok = false;
    MixedNormalForm nf;
    std::optional<QuadMap> map;
    bool on_symmetry_locus = false; // some real root yields a ~ 0
    std::string reason;             // set when !ok
};
ModuliInversion invert_moduli(const ModuliPoint& pt, const Config& cfg = Config());

// True when some real root mu of the multiplier cubic gives a^2 ~ 0, i.e. the
// class contains a map of the symmetric family (1/mu)(z +- 1/z), which
// commutes with z -> -z.
bool on_symmetry_locus(const ModuliPoint& pt, const Config& cfg = Config());

} // namespace modspace
