#pragma once

#include "tcorr/channels.hpp"
#include "tcorr/measurements.hpp"

namespace tcorr {

// Temporal steering for d=4: two settings, each an MUB measured by Alice,
// one channel use in transit, the same basis measured by Bob.
struct TsiConfig {
    double k1;
    int basis_a;
    int basis_b;
    MemoryChannel channel;
};

// Same-basis agreement sum for a single setting:
//   sum_a P(a) * P(b=a | a),  P(b|a) from the collapsed-and-evolved state.
double s4_setting(const DensityMatrix& rho, const MubBasis& basis,
                  const MemoryChannel& channel);

// S4 over both settings; lies in [0, 2].
double s4(const TsiConfig& cfg);

// 1 + 1/sqrt(d), the bound obeyed by hidden-state models.
double classical_bound(int dimension);

}  // namespace tcorr
