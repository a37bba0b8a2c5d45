#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modspace/config.hpp"
#include "modspace/moduli_coords.hpp"
#include "modspace/quadmap.hpp"

namespace modspace {

// A bitransitive postcritically finite center: both critical points lie on a
// single superattracting q-cycle whose circular dynamics advances every point
// by p positions.  The map is stored in the mixed normal form chart (critical
// points at +1 and -1), so all orbit points are finite reals.
struct PcfCenter {
    int q = 0;
    int p = 0;
    int pprime = 0;            // p * pprime = 1 (mod q)
    MixedNormalForm params;    // plus-variant (mu, a) solution
    QuadMap map;               // expand(params)
    // Critical orbit x_0..x_{q-1} in circular order: x_0 = c_0, x_1 = c_1, and
    // walking the circle from x_0 in the direction that reaches c_1 first
    // meets the points by increasing index while f(x_j) = x_{j+p}.
    std::vector<double> orbit;
    ModuliPoint moduli{0.0, 0.0};
    double residual = 0.0;     // max orbit-closure residual of the solve
    // Repelling q-cycle zeta_0..zeta_{q-1} with f(zeta_j) = zeta_{j+p} and
    // zeta_j on the boundary of the immediate basin of x_j; empty when the
    // cycle has not been located.
    std::vector<double> zeta_cycle;
};

// One verified property with its measured residual.
struct PropertyCheck {
    std::string property;
    bool pass = false;
    double residual = 0.0;
    std::string note;
};

// Outcome of verify_center: each checked property appears exactly once.
struct VerificationReport {
    std::vector<PropertyCheck> checks;
    bool all_pass() const {
        for (const PropertyCheck& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const PropertyCheck* find(const std::string& property) const {
        for (const PropertyCheck& c : checks)
            if (c.property == property) return &c;
        return nullptr;
    }
};

// Locate the center with denominator q and rotation p/q by a damped Newton
// iteration on (mu, a) in the plus normal form, residual vector
// (f^{p'}(c0) - c1, f^{q-p'}(c1) - c0), both critical labelings tried from a
// coarse seed grid plus optional caller-provided seeds (e.g. continuation
// from a neighboring q).  A candidate is accepted only when the residual is
// below cfg.newton_residual and the period/order/adjacency/interval checks
// pass; duplicates are collapsed by moduli proximity and the survivor is the
// lowest-residual, lexicographically-least (mu, a).  When nothing qualifies
// the best unverified candidate is returned with its residual as diagnostic
// (residual above tolerance signals the failure).
PcfCenter find_center(int q, int p, const Config& cfg = Config(),
                      const std::vector<MixedNormalForm>& extra_seeds = {});

// Check the defining properties of a located center:
//   d_period_exact       all q orbit points distinct, orbit closes up
//   e_rotation_order     circular ranks advance by p and match orbit order
//   f_adjacent_critical  {x_0,x_1} are the critical points, f^{p'}(c0) = c1
//   g_markov_images      f(I_j) = I_{j+p} (j != 0), f(I_0) covers the rest,
//                        orientation reversed exactly on I_0
//   j_repelling_cycle    repelling q-cycle exists with multiplier > 1 and the
//                        boundary deployment pattern around the orbit points
//   k_local_degree       log-log growth exponent 4 of f^q at c0
VerificationReport verify_center(const PcfCenter& c, const Config& cfg = Config());

// Locate the distinguished repelling q-cycle of a center: zeta_0 is the first
// repelling fixed point of f^q on the circle arc from x_0 toward x_1, and the
// cycle is completed by iteration (zeta indexed so zeta_j lies on the basin
// boundary of x_j).  Returns an empty vector when the search fails.
std::vector<double> locate_zeta_cycle(const PcfCenter& c, const Config& cfg = Config());

// Coarse dynamical type of a real quadratic rational map from its critical
// orbits: B both critical points in immediate basins of different points of
// one attracting cycle; C attracted to one cycle without that configuration;
// D two distinct attracting cycles; E both orbits to one attracting fixed
// point; Unknown when the budget finds no attractor (or the configuration is
// unresolved).
enum class HyperbolicType { B, C, D, E, Unknown };
const char* to_string(HyperbolicType t);

HyperbolicType hyperbolic_type(const QuadMap& m, long long budget,
                               const Config& cfg = Config());

// Rotation number of the real attracting cycle: order the cycle circularly,
// read off the advance p, and reduce to (0, 1/2] by p -> min(p, q-p).
// Empty when no real attracting cycle of period >= 2 is found within budget.
std::optional<std::pair<int, int>> attracting_rotation_number(
    const QuadMap& m, long long budget, const Config& cfg = Config());

} // namespace modspace
