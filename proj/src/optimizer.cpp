#include "tcorr/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tcorr {

namespace {

constexpr int kMaxEvaluations = 5000;
constexpr double kReflection = 1.0;
constexpr double kExpansion = 2.0;
constexpr double kContraction = 0.5;
constexpr double kShrink = 0.5;

std::vector<double> clamp_to_box(std::vector<double> x,
                                 const std::vector<std::array<double, 2>>& bounds) {
    for (size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], bounds[i][0], bounds[i][1]);
    }
    return x;
}

}  // namespace

OptResult nelder_mead(const OptProblem& problem, const std::vector<double>& start,
                      double tol) {
    const size_t n = start.size();
    if (problem.bounds.size() != n) throw std::invalid_argument("bounds/start size mismatch");
    for (const auto& b : problem.bounds) {
        if (!(b[0] < b[1]) || !std::isfinite(b[0]) || !std::isfinite(b[1])) {
            throw std::invalid_argument("bounds must be finite with lo < hi");
        }
    }

    long evaluations = 0;
    auto cost = [&](const std::vector<double>& x) {
        ++evaluations;
        const double value = problem.objective(x);
        if (!std::isfinite(value)) {
            throw std::runtime_error("non-finite objective value");
        }
        return -value;  // minimize the negation
    };

    // Initial simplex: start plus one offset vertex per coordinate.
    std::vector<std::vector<double>> simplex;
    std::vector<double> costs;
    simplex.push_back(clamp_to_box(start, problem.bounds));
    for (size_t i = 0; i < n; ++i) {
        auto vertex = simplex.front();
        const double span = problem.bounds[i][1] - problem.bounds[i][0];
        const double step = 0.15 * span;
        vertex[i] = (vertex[i] + step <= problem.bounds[i][1]) ? vertex[i] + step
                                                               : vertex[i] - step;
        simplex.push_back(clamp_to_box(std::move(vertex), problem.bounds));
    }
    for (const auto& vertex : simplex) costs.push_back(cost(vertex));

    OptResult result;
    auto record_best = [&]() {
        if (!problem.record_trace) return;
        result.best_trace.push_back(-*std::min_element(costs.begin(), costs.end()));
    };
    record_best();

    while (evaluations < kMaxEvaluations) {
        std::vector<size_t> order(simplex.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return costs[a] < costs[b]; });

        const double spread = costs[order.back()] - costs[order.front()];
        if (spread < tol) break;

        const size_t worst = order.back();
        const size_t second_worst = order[order.size() - 2];
        const size_t best = order.front();

        std::vector<double> centroid(n, 0.0);
        for (size_t idx : order) {
            if (idx == worst) continue;
            for (size_t i = 0; i < n; ++i) centroid[i] += simplex[idx][i];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double coeff) {
            std::vector<double> x(n);
            for (size_t i = 0; i < n; ++i) {
                x[i] = centroid[i] + coeff * (centroid[i] - simplex[worst][i]);
            }
            return clamp_to_box(std::move(x), problem.bounds);
        };

        const auto reflected = blend(kReflection);
        const double reflected_cost = cost(reflected);

        if (reflected_cost < costs[best]) {
            const auto expanded = blend(kExpansion);
            const double expanded_cost = cost(expanded);
            if (expanded_cost < reflected_cost) {
                simplex[worst] = expanded;
                costs[worst] = expanded_cost;
            } else {
                simplex[worst] = reflected;
                costs[worst] = reflected_cost;
            }
        } else if (reflected_cost < costs[second_worst]) {
            simplex[worst] = reflected;
            costs[worst] = reflected_cost;
        } else {
            const auto contracted = blend(-kContraction);
            const double contracted_cost = cost(contracted);
            if (contracted_cost < costs[worst]) {
                simplex[worst] = contracted;
                costs[worst] = contracted_cost;
            } else {
                for (size_t idx = 0; idx < simplex.size(); ++idx) {
                    if (idx == best) continue;
                    for (size_t i = 0; i < n; ++i) {
                        simplex[idx][i] = simplex[best][i] +
                                          kShrink * (simplex[idx][i] - simplex[best][i]);
                    }
                    costs[idx] = cost(simplex[idx]);
                }
            }
        }
        record_best();
    }

    size_t best = 0;
    for (size_t i = 1; i < simplex.size(); ++i) {
        if (costs[i] < costs[best]) best = i;
    }
    result.best_params = simplex[best];
    result.best_value = -costs[best];
    result.evaluations = evaluations;
    return result;
}

OptResult maximize_k4(ChannelKind kind, double p, double mu, BsmType type,
                      int restarts, std::uint64_t seed, bool optimize_k1) {
    if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");

    constexpr double pi = std::numbers::pi;
    const double frozen_k1 = 1.0 / std::sqrt(2.0);
    const size_t dim = optimize_k1 ? 9 : 8;

    const MemoryChannel channel(kind, p, mu);
    OptProblem problem;
    problem.bounds.assign(4, {0.0, pi});
    problem.bounds.resize(8, {0.0, 2.0 * pi});
    if (optimize_k1) problem.bounds.push_back({0.0, 1.0});
    problem.objective = [&](const std::vector<double>& x) {
        const LgiConfig cfg{optimize_k1 ? x[8] : frozen_k1,
                            {Direction(x[0], x[4]), Direction(x[1], x[5]),
                             Direction(x[2], x[6]), Direction(x[3], x[7])},
                            type, channel};
        return k4(cfg);
    };

    // Pre-draw every start so the result is independent of evaluation order.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::vector<double>> starts(restarts);
    for (auto& start : starts) {
        start.resize(dim);
        for (size_t i = 0; i < dim; ++i) {
            start[i] = problem.bounds[i][0] +
                       unit(rng) * (problem.bounds[i][1] - problem.bounds[i][0]);
        }
    }

    OptResult best;
    bool have_best = false;
    long total_evaluations = 0;
    for (int r = 0; r < restarts; ++r) {
        OptResult candidate;
        try {
            candidate = nelder_mead(problem, starts[r], 1e-10);
        } catch (const std::runtime_error&) {
            continue;  // abort this restart, keep the others
        }
        total_evaluations += candidate.evaluations;
        if (!have_best || candidate.best_value > best.best_value) {
            best = candidate;
            best.restart_index = r;
            have_best = true;
        }
    }
    if (!have_best) throw std::runtime_error("all restarts aborted");
    best.evaluations = total_evaluations;
    return best;
}

}  // namespace tcorr
