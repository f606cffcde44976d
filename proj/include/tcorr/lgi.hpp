#pragma once

#include "tcorr/channels.hpp"
#include "tcorr/measurements.hpp"

#include <array>

namespace tcorr {

// Four sequential Bell-state measurements Q1..Q4 on a Schmidt state, with one
// channel use per unit time interval.  No channel acts before t1, so the
// correlator C_ij sees (i-1) uses before Q_i and (j-i) uses between Q_i
// and Q_j.
struct LgiConfig {
    double k1;
    std::array<Direction, 4> directions;
    BsmType bsm_type;
    MemoryChannel channel;
};

struct CorrelatorPair {
    int i;
    int j;

    CorrelatorPair(int first, int second);
};

// C_ij = sum_{k,l} k*l*P(k,l), branch paths enumerated exactly.
double correlator(const LgiConfig& cfg, const CorrelatorPair& pair);

// K4 = C12 + C23 + C34 - C14.
double k4(const LgiConfig& cfg);

}  // namespace tcorr
