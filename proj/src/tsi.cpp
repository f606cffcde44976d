#include "tcorr/tsi.hpp"

#include <cmath>
#include <stdexcept>

namespace tcorr {

double s4_setting(const DensityMatrix& rho, const MubBasis& basis,
                  const MemoryChannel& channel) {
    double total = 0.0;
    for (const auto& ket : basis.kets) {
        const double p_alice = expectation(rho.matrix(), ket);
        if (p_alice <= 1e-14) continue;
        // Alice's rank-1 collapse, one channel use, Bob asks for the same ket.
        const SquareMatrix evolved = channel.apply_raw(outer(ket, ket));
        total += p_alice * expectation(evolved, ket);
    }
    return total;
}

double s4(const TsiConfig& cfg) {
    if (cfg.basis_a == cfg.basis_b) {
        throw std::invalid_argument("the two settings must use distinct bases");
    }
    const DensityMatrix rho = to_density(schmidt_state(cfg.k1));
    return s4_setting(rho, mub_basis(cfg.basis_a), cfg.channel) +
           s4_setting(rho, mub_basis(cfg.basis_b), cfg.channel);
}

double classical_bound(int dimension) {
    if (dimension < 2) throw std::invalid_argument("dimension must be >= 2");
    return 1.0 + 1.0 / std::sqrt(static_cast<double>(dimension));
}

}  // namespace tcorr
