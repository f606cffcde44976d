#include "tcorr/lgi.hpp"

#include <stdexcept>

namespace tcorr {

namespace {

// Correlator for a state already evolved to the first measurement time.
double correlate(const DensityMatrix& state, const BsmScheme& first,
                 const BsmScheme& second, const MemoryChannel& channel, int gap) {
    double value = 0.0;
    for (const auto& branch : measure_branches(state, first)) {
        if (!branch.post_state) continue;
        const DensityMatrix evolved = channel.apply_n(*branch.post_state, gap);
        for (const auto& late : second.branches) {
            const double prob = trace(late.projector * evolved.matrix()).real();
            value += branch.outcome * late.outcome * branch.probability * prob;
        }
    }
    return value;
}

}  // namespace

CorrelatorPair::CorrelatorPair(int first, int second) : i(first), j(second) {
    if (i < 1 || j > 4 || i >= j) {
        throw std::invalid_argument("correlator pair requires 1 <= i < j <= 4");
    }
}

double correlator(const LgiConfig& cfg, const CorrelatorPair& pair) {
    const DensityMatrix initial = to_density(schmidt_state(cfg.k1));
    const DensityMatrix at_first = cfg.channel.apply_n(initial, pair.i - 1);
    const BsmScheme first = bsm_scheme(cfg.bsm_type, cfg.directions[pair.i - 1]);
    const BsmScheme second = bsm_scheme(cfg.bsm_type, cfg.directions[pair.j - 1]);
    return correlate(at_first, first, second, cfg.channel, pair.j - pair.i);
}

double k4(const LgiConfig& cfg) {
    const std::array<BsmScheme, 4> schemes = {
        bsm_scheme(cfg.bsm_type, cfg.directions[0]),
        bsm_scheme(cfg.bsm_type, cfg.directions[1]),
        bsm_scheme(cfg.bsm_type, cfg.directions[2]),
        bsm_scheme(cfg.bsm_type, cfg.directions[3]),
    };

    const DensityMatrix rho1 = to_density(schmidt_state(cfg.k1));
    const DensityMatrix rho2 = cfg.channel.apply(rho1);
    const DensityMatrix rho3 = cfg.channel.apply(rho2);

    const double c12 = correlate(rho1, schemes[0], schemes[1], cfg.channel, 1);
    const double c23 = correlate(rho2, schemes[1], schemes[2], cfg.channel, 1);
    const double c34 = correlate(rho3, schemes[2], schemes[3], cfg.channel, 1);
    const double c14 = correlate(rho1, schemes[0], schemes[3], cfg.channel, 3);

    return c12 + c23 + c34 - c14;
}

}  // namespace tcorr
