#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcorr/lgi.hpp"
#include "tcorr/reference.hpp"

#include <cmath>
#include <random>

using namespace tcorr;

namespace {

const double kBalanced = 1.0 / std::sqrt(2.0);

LgiConfig preset_config(ChannelKind kind, BsmType type, double p, double mu) {
    const AnglePreset a = optimal_angles(kind, type);
    return LgiConfig{kBalanced,
                     {Direction(a.theta[0], a.phi[0]), Direction(a.theta[1], a.phi[1]),
                      Direction(a.theta[2], a.phi[2]), Direction(a.theta[3], a.phi[3])},
                     type, MemoryChannel(kind, p, mu)};
}

std::mt19937_64 rng(2718);

LgiConfig random_config() {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const ChannelKind kinds[] = {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
                                 ChannelKind::Depolarizing};
    const BsmType types[] = {BsmType::TypeI, BsmType::TypeII, BsmType::TypeIII};
    auto direction = [&] {
        return Direction(unit(rng) * 3.14159, unit(rng) * 6.28318);
    };
    return LgiConfig{unit(rng),
                     {direction(), direction(), direction(), direction()},
                     types[rng() % 3],
                     MemoryChannel(kinds[rng() % 3], unit(rng), unit(rng))};
}

}  // namespace

TEST_CASE("repeated projective measurement is deterministic at p=0") {
    const Direction d(1.1, 0.6);
    const LgiConfig cfg{kBalanced,
                        {d, d, d, d},
                        BsmType::TypeII,
                        MemoryChannel(ChannelKind::PhaseDamping, 0.0, 0.0)};
    CHECK(correlator(cfg, CorrelatorPair(1, 2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(correlator(cfg, CorrelatorPair(3, 4)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("identity-channel maximum decomposes over the four correlators") {
    const LgiConfig cfg = preset_config(ChannelKind::AmplitudeDamping, BsmType::TypeI,
                                        0.0, 0.0);
    const double c12 = correlator(cfg, CorrelatorPair(1, 2));
    const double c23 = correlator(cfg, CorrelatorPair(2, 3));
    const double c34 = correlator(cfg, CorrelatorPair(3, 4));
    const double c14 = correlator(cfg, CorrelatorPair(1, 4));
    const double total = c12 + c23 + c34 - c14;
    CHECK(std::abs(total - 3.18) < 0.01);
    CHECK(std::abs(k4(cfg) - total) < 1e-12);
}

TEST_CASE("k4 at the catalogued optima") {
    CHECK(std::abs(k4(preset_config(ChannelKind::AmplitudeDamping, BsmType::TypeI, 0.0,
                                    0.0)) -
                   3.18) < 0.01);
    CHECK(std::abs(k4(preset_config(ChannelKind::PhaseDamping, BsmType::TypeI, 0.7,
                                    1.0)) -
                   3.00) < 0.01);
    CHECK(std::abs(k4(preset_config(ChannelKind::Depolarizing, BsmType::TypeII, 1.0,
                                    0.0)) -
                   0.71) < 0.1);
}

TEST_CASE("fully correlated dephasing leaves every correlator at its p=0 value") {
    // The catalogued angles are two-decimal rounded, so constancy holds at the
    // rounding scale rather than machine precision.
    for (const auto pair : {CorrelatorPair(1, 2), CorrelatorPair(2, 3),
                            CorrelatorPair(3, 4), CorrelatorPair(1, 4)}) {
        const double base = correlator(
            preset_config(ChannelKind::PhaseDamping, BsmType::TypeI, 0.0, 1.0), pair);
        for (const double p : {0.2, 0.5, 0.8, 1.0}) {
            const double value = correlator(
                preset_config(ChannelKind::PhaseDamping, BsmType::TypeI, p, 1.0), pair);
            CHECK(std::abs(value - base) < 1e-5);
        }
    }
}

TEST_CASE("correlators are bounded and k4 stays in [-4, 4]") {
    for (int round = 0; round < 15; ++round) {
        const LgiConfig cfg = random_config();
        for (const auto pair : {CorrelatorPair(1, 2), CorrelatorPair(2, 3),
                                CorrelatorPair(3, 4), CorrelatorPair(1, 4)}) {
            CHECK(std::abs(correlator(cfg, pair)) <= 1.0 + 1e-12);
        }
        const double value = k4(cfg);
        CHECK(value <= 4.0 + 1e-12);
        CHECK(value >= -4.0 - 1e-12);
    }
}

TEST_CASE("at p=0 the memory coefficient is irrelevant") {
    for (const auto kind : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
                            ChannelKind::Depolarizing}) {
        const double base = k4(preset_config(kind, BsmType::TypeI, 0.0, 0.0));
        for (const double mu : {0.3, 0.7, 1.0}) {
            CHECK(std::abs(k4(preset_config(kind, BsmType::TypeI, 0.0, mu)) - base) <
                  1e-12);
        }
    }
}

TEST_CASE("joint branch probabilities are normalized inside a correlator") {
    for (int round = 0; round < 10; ++round) {
        const LgiConfig cfg = random_config();
        const DensityMatrix initial = to_density(schmidt_state(cfg.k1));
        const BsmScheme first = bsm_scheme(cfg.bsm_type, cfg.directions[0]);
        const BsmScheme second = bsm_scheme(cfg.bsm_type, cfg.directions[1]);

        double total = 0.0;
        for (const auto& branch : measure_branches(initial, first)) {
            if (!branch.post_state) continue;
            const DensityMatrix evolved = cfg.channel.apply(*branch.post_state);
            for (const auto& late : second.branches) {
                total += branch.probability *
                         trace(late.projector * evolved.matrix()).real();
            }
        }
        CHECK(std::abs(total - 1.0) < 1e-10);
    }
}

TEST_CASE("collapse granularity separates Type-I from Type-III under noise") {
    const AnglePreset a = optimal_angles(ChannelKind::AmplitudeDamping, BsmType::TypeI);
    const MemoryChannel channel(ChannelKind::AmplitudeDamping, 0.5, 0.3);
    const LgiConfig fine{kBalanced,
                         {Direction(a.theta[0], a.phi[0]), Direction(a.theta[1], a.phi[1]),
                          Direction(a.theta[2], a.phi[2]), Direction(a.theta[3], a.phi[3])},
                         BsmType::TypeI, channel};
    LgiConfig coarse = fine;
    coarse.bsm_type = BsmType::TypeIII;
    CHECK(std::abs(k4(fine) - k4(coarse)) > 1e-6);
}

TEST_CASE("correlator pair validation") {
    CHECK_THROWS_AS(CorrelatorPair(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(CorrelatorPair(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(CorrelatorPair(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(CorrelatorPair(1, 5), std::invalid_argument);
}
