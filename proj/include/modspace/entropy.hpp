#pragma once

#include <cstdint>
#include <vector>

#include "modspace/config.hpp"
#include "modspace/quadmap.hpp"

namespace modspace {

// Transition data for the circle Markov partition of a (q,p) bitransitive
// center: interval I_j is the arc between consecutive orbit points, column j
// records which intervals the image f(I_j) covers.  Row p is identically zero
// (the arc I_p is missed by every image).
struct MarkovData {
    int q = 0;
    int p = 0;
    std::vector<std::vector<int>> matrix; // matrix[i][j] = 1 iff f(I_j) covers I_i
};

MarkovData markov_matrix(int q, int p);

// Exact integer characteristic polynomial, coefficients low degree first
// (length q+1, leading coefficient 1).
std::vector<long long> char_poly(const MarkovData& md);

struct SpectralResult {
    double value = 0.0;       // leading eigenvalue
    double error_bound = 0.0; // Collatz-Wielandt quotient spread
    long iterations = 0;
};

SpectralResult spectral_radius(const MarkovData& md, double tol);

enum class EntropyMethod { MarkovEigen, PolyRoot, LapCount };
const char* to_string(EntropyMethod m);

struct EntropyEstimate {
    double value = 0.0; // natural-log units
    EntropyMethod method = EntropyMethod::LapCount;
    double error_bound = 0.0;
    long iterations = 0;
    bool budget_exhausted = false; // lap counting stopped at the point cap
    bool collision_flag = false;   // turning-point preimages collided within tolerance
};

// log of the leading eigenvalue of markov_matrix(q,p).
EntropyEstimate markov_entropy(int q, int p, double tol);

// log of the unique root of P_q(t) = t^q - 2 t^{q-1} + 1 in (2(q-1)/q, 2),
// evaluated in the product form t^{q-1}(t-2) + 1.
EntropyEstimate root_of_Pq(int q, double tol);

double entropy_poly_Pq(int q, double t); // the product-form evaluation

// Growth rate of lap counts of iterates of the restriction of f to the
// invariant interval f(R-hat).  Covering classes return log 2 exactly;
// monotone-class maps (and restrictions with no interior turning point)
// return 0 exactly.
EntropyEstimate lap_entropy(const QuadMap& f, int n_max, std::size_t budget,
                            const Config& cfg = Config());

inline EntropyEstimate lap_entropy(const QuadMap& f, const Config& cfg = Config()) {
    return lap_entropy(f, cfg.lap_max_level, cfg.lap_budget, cfg);
}

} // namespace modspace
