#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcorr/channels.hpp"

#include <cmath>
#include <random>

using namespace tcorr;

namespace {

constexpr ChannelKind kKinds[] = {ChannelKind::AmplitudeDamping,
                                  ChannelKind::PhaseDamping,
                                  ChannelKind::Depolarizing};

std::mt19937_64 rng(424242);

DensityMatrix random_pure_density() {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector v(4);
    for (int i = 0; i < 4; ++i) v.at(i) = Complex{gauss(rng), gauss(rng)};
    const double n = norm(v);
    for (int i = 0; i < 4; ++i) v.at(i) = v.at(i) / n;
    return DensityMatrix(outer(v, v));
}

// Independent route: single-qubit operators embedded one qubit at a time.
SquareMatrix sequential_single_qubit(ChannelKind kind, double p, const SquareMatrix& rho) {
    const auto singles = single_qubit_kraus(kind, p);
    const SquareMatrix id2 = SquareMatrix::identity(2);
    SquareMatrix first(4);
    for (const auto& e : singles) {
        const SquareMatrix op = tensor_product(e, id2);
        first = first + op * rho * adjoint(op);
    }
    SquareMatrix second(4);
    for (const auto& e : singles) {
        const SquareMatrix op = tensor_product(id2, e);
        second = second + op * first * adjoint(op);
    }
    return second;
}

}  // namespace

TEST_CASE("uncorrelated sets: operator counts and completeness") {
    CHECK(build_uncorrelated_kraus(ChannelKind::AmplitudeDamping, 0.3).ops.size() == 4);
    CHECK(build_uncorrelated_kraus(ChannelKind::PhaseDamping, 0.3).ops.size() == 4);
    CHECK(build_uncorrelated_kraus(ChannelKind::Depolarizing, 0.3).ops.size() == 16);

    for (const double p : {0.0, 0.3, 1.0}) {
        for (const auto kind : kKinds) {
            CHECK(completeness_residual(build_uncorrelated_kraus(kind, p)) < 1e-12);
        }
    }
}

TEST_CASE("amplitude damping at p=0 acts as the identity") {
    const MemoryChannel channel(ChannelKind::AmplitudeDamping, 0.0, 0.0);
    const DensityMatrix rho = random_pure_density();
    CHECK(max_abs_diff(channel.apply(rho).matrix(), rho.matrix()) == 0.0);
}

TEST_CASE("phase damping weights at p=0.5") {
    const KrausSet set = build_uncorrelated_kraus(ChannelKind::PhaseDamping, 0.5);
    REQUIRE(set.ops.size() == 4);
    for (const auto& op : set.ops) {
        CHECK(max_abs(op) == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("correlated amplitude damping matches the stated matrices") {
    {
        const KrausSet set = build_correlated_kraus(ChannelKind::AmplitudeDamping, 1.0);
        REQUIRE(set.ops.size() == 2);
        CHECK(std::abs(set.ops[0].at(0, 0)) == 0.0);
        CHECK(set.ops[0].at(1, 1) == Complex{1.0});
        CHECK(set.ops[0].at(2, 2) == Complex{1.0});
        CHECK(set.ops[0].at(3, 3) == Complex{1.0});
        CHECK(set.ops[1].at(3, 0) == Complex{1.0});
    }
    for (const double p : {0.0, 0.17, 0.58, 1.0}) {
        const KrausSet set = build_correlated_kraus(ChannelKind::AmplitudeDamping, p);
        SquareMatrix sum(4);
        for (const auto& op : set.ops) sum = sum + adjoint(op) * op;
        CHECK(max_abs_diff(sum, SquareMatrix::identity(4)) == 0.0);
    }
}

TEST_CASE("correlated phase damping fixes the maximally entangled state") {
    ComplexVector bell(4);
    bell.at(0) = 1.0 / std::sqrt(2.0);
    bell.at(3) = 1.0 / std::sqrt(2.0);
    const DensityMatrix rho = DensityMatrix(outer(bell, bell));
    for (const double p : {0.1, 0.5, 0.9}) {
        const MemoryChannel channel(ChannelKind::PhaseDamping, p, 1.0);
        CHECK(max_abs_diff(channel.apply(rho).matrix(), rho.matrix()) < 1e-15);
    }
}

TEST_CASE("perfectly correlated full damping flips |00> to |11>") {
    const MemoryChannel channel(ChannelKind::AmplitudeDamping, 1.0, 1.0);
    SquareMatrix ground(4);
    ground.at(0, 0) = 1.0;
    const DensityMatrix out = channel.apply(DensityMatrix(ground));
    CHECK(out.matrix().at(3, 3).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(out.matrix().at(0, 0)) < 1e-15);
}

TEST_CASE("memoryless channel equals sequential single-qubit action") {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const auto kind : kKinds) {
        for (int round = 0; round < 5; ++round) {
            const double p = unit(rng);
            const DensityMatrix rho = random_pure_density();
            const MemoryChannel channel(kind, p, 0.0);
            CHECK(max_abs_diff(channel.apply(rho).matrix(),
                               sequential_single_qubit(kind, p, rho.matrix())) < 1e-12);
        }
    }
}

TEST_CASE("weighted completeness residual") {
    CHECK(MemoryChannel(ChannelKind::AmplitudeDamping, 0.37, 0.42).completeness_residual() <
          1e-12);
    CHECK(MemoryChannel(ChannelKind::PhaseDamping, 1.0, 0.0).completeness_residual() <
          1e-12);
    CHECK(MemoryChannel(ChannelKind::Depolarizing, 0.9, 1.0).completeness_residual() <
          1e-12);
}

TEST_CASE("channel output stays a valid state and interpolates affinely in mu") {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int round = 0; round < 25; ++round) {
        const ChannelKind kind = kKinds[pick(rng)];
        const double p = unit(rng);
        const double mu = unit(rng);
        const DensityMatrix rho = random_pure_density();

        const DensityMatrix out = MemoryChannel(kind, p, mu).apply(rho);
        CHECK(std::abs(trace(out.matrix()).real() - 1.0) < 1e-12);
        CHECK(hermitian_eigenvalues(out.matrix()).front() >= -1e-10);

        const SquareMatrix blended =
            (1.0 - mu) * MemoryChannel(kind, p, 0.0).apply(rho).matrix() +
            mu * MemoryChannel(kind, p, 1.0).apply(rho).matrix();
        CHECK(max_abs_diff(out.matrix(), blended) < 1e-12);
    }
}

TEST_CASE("unital behaviour at mu=1: pd and depol fix 1/4, ad does not") {
    const DensityMatrix mixed = DensityMatrix(0.25 * SquareMatrix::identity(4));
    for (const auto kind : {ChannelKind::PhaseDamping, ChannelKind::Depolarizing}) {
        const MemoryChannel channel(kind, 0.5, 1.0);
        CHECK(max_abs_diff(channel.apply(mixed).matrix(), mixed.matrix()) < 1e-12);
    }
    const MemoryChannel damping(ChannelKind::AmplitudeDamping, 0.5, 1.0);
    CHECK(max_abs_diff(damping.apply(mixed).matrix(), mixed.matrix()) > 1e-3);
}

TEST_CASE("out-of-range parameters are rejected") {
    CHECK_THROWS_AS(MemoryChannel(ChannelKind::PhaseDamping, -0.1, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(MemoryChannel(ChannelKind::PhaseDamping, 1.1, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(MemoryChannel(ChannelKind::PhaseDamping, 0.5, -0.1),
                    std::invalid_argument);
    CHECK_THROWS_AS(MemoryChannel(ChannelKind::PhaseDamping, 0.5, 1.1),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_uncorrelated_kraus(ChannelKind::Depolarizing, 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_correlated_kraus(ChannelKind::Depolarizing, -1.0),
                    std::invalid_argument);
}
