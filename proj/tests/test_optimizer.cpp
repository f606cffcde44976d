#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tcorr/optimizer.hpp"
#include "tcorr/reference.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace tcorr;

TEST_CASE("one-dimensional quadratic") {
    OptProblem problem;
    problem.objective = [](const std::vector<double>& x) {
        return -(x[0] - 1.0) * (x[0] - 1.0);
    };
    problem.bounds = {{-5.0, 5.0}};
    const OptResult result = nelder_mead(problem, {0.0}, 1e-12);
    CHECK(std::abs(result.best_params[0] - 1.0) < 1e-6);
    CHECK(std::abs(result.best_value) < 1e-10);
}

TEST_CASE("nine-dimensional quadratic bowl") {
    OptProblem problem;
    problem.objective = [](const std::vector<double>& x) {
        double total = 0.0;
        for (double xi : x) total -= (xi - 0.5) * (xi - 0.5);
        return total;
    };
    problem.bounds.assign(9, {0.0, 1.0});
    const OptResult result = nelder_mead(problem, std::vector<double>(9, 0.1), 1e-14);
    CHECK(std::abs(result.best_value) < 1e-8);
}

TEST_CASE("trial points stay inside the box") {
    OptProblem problem;
    problem.objective = [](const std::vector<double>& x) { return x[0] + x[1]; };
    problem.bounds = {{0.0, 2.0}, {0.0, 3.0}};
    const OptResult result = nelder_mead(problem, {1.0, 1.5}, 1e-12);
    CHECK(result.best_params[0] <= 2.0);
    CHECK(result.best_params[1] <= 3.0);
    CHECK(result.best_value == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("best-so-far trace never decreases") {
    OptProblem problem;
    problem.objective = [](const std::vector<double>& x) {
        return std::sin(3.0 * x[0]) * std::cos(2.0 * x[1]) - 0.1 * x[0] * x[0];
    };
    problem.bounds = {{-3.0, 3.0}, {-3.0, 3.0}};
    problem.record_trace = true;
    const OptResult result = nelder_mead(problem, {-2.0, 2.0}, 1e-12);
    REQUIRE(result.best_trace.size() > 1);
    for (size_t i = 1; i < result.best_trace.size(); ++i) {
        CHECK(result.best_trace[i] >= result.best_trace[i - 1] - 1e-15);
    }
}

TEST_CASE("non-finite objective values abort the run") {
    OptProblem problem;
    problem.objective = [](const std::vector<double>&) {
        return std::numeric_limits<double>::quiet_NaN();
    };
    problem.bounds = {{0.0, 1.0}};
    CHECK_THROWS_AS(nelder_mead(problem, {0.5}, 1e-12), std::runtime_error);
}

TEST_CASE("seeded k4 search is deterministic") {
    const OptResult a =
        maximize_k4(ChannelKind::PhaseDamping, 0.2, 0.5, BsmType::TypeII, 6, 99ULL);
    const OptResult b =
        maximize_k4(ChannelKind::PhaseDamping, 0.2, 0.5, BsmType::TypeII, 6, 99ULL);
    CHECK(a.best_value == b.best_value);
    CHECK(a.restart_index == b.restart_index);
    CHECK(a.evaluations == b.evaluations);
    REQUIRE(a.best_params.size() == b.best_params.size());
    for (size_t i = 0; i < a.best_params.size(); ++i) {
        CHECK(a.best_params[i] == b.best_params[i]);
    }
}

TEST_CASE("k4 search result respects the parameter box and the algebraic bound") {
    constexpr double pi = std::numbers::pi;
    const OptResult result =
        maximize_k4(ChannelKind::AmplitudeDamping, 0.3, 0.6, BsmType::TypeI, 8, 5ULL);
    REQUIRE(result.best_params.size() == 9);
    for (int i = 0; i < 4; ++i) {
        CHECK(result.best_params[i] >= 0.0);
        CHECK(result.best_params[i] <= pi);
        CHECK(result.best_params[4 + i] >= 0.0);
        CHECK(result.best_params[4 + i] <= 2.0 * pi);
    }
    CHECK(result.best_params[8] >= 0.0);
    CHECK(result.best_params[8] <= 1.0);
    CHECK(result.best_value <= 4.0 + 1e-12);
}

TEST_CASE("frozen-k1 mode optimizes eight parameters") {
    const OptResult result = maximize_k4(ChannelKind::PhaseDamping, 0.0, 0.0,
                                         BsmType::TypeI, 8, 7ULL, false);
    CHECK(result.best_params.size() == 8);
    CHECK(result.best_value <= 4.0 + 1e-12);
    // The identity-channel landscape tops out well above the dichotomic 2*sqrt(2).
    CHECK(result.best_value > 2.9);
}

TEST_CASE("search does at least as well as a coarse angle grid") {
    constexpr double pi = std::numbers::pi;
    const MemoryChannel channel(ChannelKind::PhaseDamping, 0.0, 0.0);
    const double thetas[] = {0.3, pi / 2.0, pi - 0.3};
    const double phis[] = {0.5, pi, 2.0 * pi - 0.5};
    double grid_best = -4.0;
    for (double t1 : thetas)
        for (double t2 : thetas)
            for (double t3 : thetas)
                for (double t4 : thetas)
                    for (double f1 : phis)
                        for (double f2 : phis)
                            for (double f3 : phis)
                                for (double f4 : phis) {
                                    const LgiConfig cfg{
                                        1.0 / std::sqrt(2.0),
                                        {Direction(t1, f1), Direction(t2, f2),
                                         Direction(t3, f3), Direction(t4, f4)},
                                        BsmType::TypeI, channel};
                                    grid_best = std::max(grid_best, k4(cfg));
                                }
    const OptResult result = maximize_k4(ChannelKind::PhaseDamping, 0.0, 0.0,
                                         BsmType::TypeI, 16, 11ULL, false);
    CHECK(result.best_value >= grid_best - 1e-9);
}

TEST_CASE("restart count must be positive") {
    CHECK_THROWS_AS(maximize_k4(ChannelKind::PhaseDamping, 0.1, 0.1, BsmType::TypeI, 0,
                                1ULL),
                    std::invalid_argument);
}
