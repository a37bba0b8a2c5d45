#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "modspace/entropy.hpp"
#include "modspace/errors.hpp"

namespace modspace {

MarkovData markov_matrix(int q, int p) {
    if (q < 2) throw std::invalid_argument("markov_matrix: q must be >= 2");
    if (p < 1 || p > q - 1) throw std::invalid_argument("markov_matrix: need 1 <= p <= q-1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("markov_matrix: p, q must be coprime");

    MarkovData md{q, p, std::vector<std::vector<int>>(q, std::vector<int>(q, 0))};
    // f(I_0) covers every interval except I_p; f(I_j) = I_{j+p} for j != 0
    for (int i = 0; i < q; ++i)
        if (i != p) md.matrix[i][0] = 1;
    for (int j = 1; j < q; ++j) md.matrix[(j + p) % q][j] = 1;
    return md;
}

namespace {

using Wide = __int128;

long long narrow(Wide v, const char* where) {
    if (v > Wide(9223372036854775807LL) || v < -Wide(9223372036854775807LL) - 1)
        throw std::overflow_error(std::string(where) + ": coefficient overflow");
    return static_cast<long long>(v);
}

} // namespace

std::vector<long long> char_poly(const MarkovData& md) {
    const int n = md.q;
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
    // All intermediates are exact integers for an integer matrix.
    std::vector<std::vector<Wide>> A(n, std::vector<Wide>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = md.matrix[i][j];

    // B_1 = A; c_{n-k} = -tr(B_k)/k; B_{k+1} = A (B_k + c_{n-k} I) = A B_k + c_{n-k} A
    std::vector<std::vector<Wide>> B = A;
    std::vector<Wide> coeff(n + 1, 0);
    coeff[n] = 1;
    for (int k = 1; k <= n; ++k) {
        Wide tr = 0;
        for (int i = 0; i < n; ++i) tr += B[i][i];
        Wide ck = -tr / k; // division is exact
        coeff[n - k] = ck;
        if (k == n) break;
        std::vector<std::vector<Wide>> next(n, std::vector<Wide>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                Wide acc = ck * A[i][l];
                for (int j = 0; j < n; ++j) acc += A[i][j] * B[j][l];
                next[i][l] = acc;
            }
        B = std::move(next);
    }

    std::vector<long long> out(n + 1);
    for (int i = 0; i <= n; ++i) out[i] = narrow(coeff[i], "char_poly");
    return out;
}

SpectralResult spectral_radius(const MarkovData& md, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("spectral_radius: tol must be positive");
    const int q = md.q;
    // Row p is zero, so the spectrum is {0} plus the spectrum of the submatrix
    // with row and column p removed; that block is primitive, which makes the
    // Collatz-Wielandt quotients converge to the leading eigenvalue.
    const int n = q - 1;
    std::vector<int> keep;
    keep.reserve(n);
    for (int i = 0; i < q; ++i)
        if (i != md.p) keep.push_back(i);

    std::vector<double> x(n, 1.0), y(n, 0.0);
    SpectralResult res;
    const long cap = 200000;
    for (long it = 1; it <= cap; ++it) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += md.matrix[keep[i]][keep[j]] * x[j];
            y[i] = acc;
        }
        double lo = 1e300, hi = 0.0;
        for (int i = 0; i < n; ++i) {
            double ratio = y[i] / x[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        double norm = 0.0;
        for (double v : y) norm = std::max(norm, v);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
        res.value = 0.5 * (lo + hi);
        res.error_bound = 0.5 * (hi - lo);
        res.iterations = it;
        if (res.error_bound < tol) return res;
    }
    throw ConvergenceError("spectral_radius: quotient spread " +
                           std::to_string(res.error_bound) + " after iteration cap");
}

EntropyEstimate markov_entropy(int q, int p, double tol) {
    SpectralResult sr = spectral_radius(markov_matrix(q, p), tol);
    EntropyEstimate est;
    est.value = std::log(sr.value);
    est.method = EntropyMethod::MarkovEigen;
    est.error_bound = sr.error_bound / sr.value; // d(log t) = dt / t
    est.iterations = sr.iterations;
    return est;
}

const char* to_string(EntropyMethod m) {
    switch (m) {
        case EntropyMethod::MarkovEigen: return "markov_eigen";
        case EntropyMethod::PolyRoot: return "poly_root";
        case EntropyMethod::LapCount: return "lap_count";
    }
    return "?";
}

} // namespace modspace
