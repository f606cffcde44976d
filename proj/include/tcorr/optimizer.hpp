#pragma once

#include "tcorr/lgi.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace tcorr {

struct OptProblem {
    std::function<double(const std::vector<double>&)> objective;  // maximized
    std::vector<std::array<double, 2>> bounds;                    // per-parameter [lo, hi]
    bool record_trace = false;
};

struct OptResult {
    std::vector<double> best_params;
    double best_value = 0.0;
    long evaluations = 0;
    int restart_index = 0;
    std::vector<double> best_trace;  // best-so-far per iteration, if recorded
};

// Nelder-Mead on the negated objective with coefficients (1, 2, 0.5, 0.5).
// Trial points are clamped into the box; stops when the simplex value spread
// falls below tol or after 5000 objective evaluations.  Throws on a
// non-finite objective value.
OptResult nelder_mead(const OptProblem& problem, const std::vector<double>& start,
                      double tol);

// Best K4 over seeded uniform-random restarts.  Parameter layout is
// (theta1..theta4, phi1..phi4[, k1]); k1 is optimized on [0,1] unless frozen
// at 1/sqrt(2).  Deterministic for a fixed seed; ties go to the lowest
// restart index.
OptResult maximize_k4(ChannelKind kind, double p, double mu, BsmType type,
                      int restarts, std::uint64_t seed, bool optimize_k1 = true);

}  // namespace tcorr
