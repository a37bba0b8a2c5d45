#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace modspace {

// Numerical knobs shared across the library.  Every tolerance/budget that an
// algorithm consults lives here so runs are reproducible from one flat file.
//
// File format: one `key = value` per line, `#` comments, unknown keys rejected.
// Load order: built-in defaults, then the file named by $MODSPACE_CONFIG (if
// set), then an explicit file, then individual overrides -- later wins.
struct Config {
    // identities that should hold to rounding (fixed-point formula, sigma3 check)
    double tol_identity = 1e-9;
    // geometric coincidence tests (parabolic collisions, boundary hits, snapping)
    double tol_geometry = 1e-6;
    // |multiplier| at which a fixed point counts as blown up (ideal-point readout)
    double blowup_threshold = 1e3;

    // critical-orbit Newton solve for bitransitive centers
    double newton_residual = 1e-10; // accept when ||R||_inf drops below this
    int    newton_max_iter = 60;
    double newton_fd_step  = 1e-7;  // central-difference Jacobian step

    // lap-count entropy estimator
    int         lap_max_level = 24;       // compositions of f to examine
    std::size_t lap_budget    = 2000000;  // cap on stored turning-point preimages
    double      lap_error_floor = 2e-3;   // reported error is never below this

    // attracting-cycle detection (hyperbolic type / rotation number)
    std::size_t cycle_budget     = 20000; // forward iterations per critical orbit
    int         cycle_max_period = 64;
    double      cycle_tol        = 1e-7;  // revisit distance that opens a cycle candidate

    // constant-entropy barrier continuation
    double barrier_sigma1_min = -60.0; // continue the curve down to this sigma1
    double barrier_step       = 0.5;   // sigma1 decrement per polyline vertex
    double barrier_snap       = 1e-6;  // distance at which a point reads OnBarrier

    // non-monotonicity demonstration
    double demo_anchor_right_s1 = -5.5;  // low-entropy anchor right of the barrier
    double demo_anchor_right_s2 = 14.0;
    double demo_anchor_wedge_s1 = -10.5; // low-entropy anchor inside the wedge
    double demo_anchor_wedge_s2 = 19.5;
    int    demo_scan_samples    = 160;   // bracket scan resolution along a probe
    double demo_witness_tol     = 0.015; // |entropy(witness) - level| target

    // grid sweeps
    int         threads        = 1;      // worker threads for sweep()
    int         sweep_max_level   = 18;  // per-cell lap levels for sweeps
    std::size_t sweep_lap_budget  = 30000;

    // ---- loading ----------------------------------------------------------
    // Defaults, then $MODSPACE_CONFIG if present.
    static Config load_default();
    // Defaults, then $MODSPACE_CONFIG, then `path` (must exist).
    static Config load_file(const std::string& path);
    // Apply one `key=value` assignment; throws std::invalid_argument on bad keys.
    void set(const std::string& key, const std::string& value);
    // Apply every assignment in a file.
    void merge_file(const std::string& path);

    // Known keys with current values, for `--dump-config`.
    std::string dump() const;
};

} // namespace modspace
