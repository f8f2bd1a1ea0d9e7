#include "runnerbench/ppa.hpp"

#include <stdexcept>
#include <string>

namespace runnerbench::ppa {

std::vector<double> normalize_objectives(std::span<const double> objectives) {
    if (objectives.empty()) throw std::invalid_argument("normalize_objectives: empty input");
    const auto [lo_it, hi_it] = std::minmax_element(objectives.begin(), objectives.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    std::vector<double> fitness(objectives.size());
    if (lo == hi) {
        std::fill(fitness.begin(), fitness.end(), 0.5);
        return fitness;
    }
    const double eps = kNormalizationEps;
    const double span = hi - lo;
    for (std::size_t i = 0; i < fitness.size(); ++i) {
        fitness[i] = eps + (1.0 - 2.0 * eps) * (hi - objectives[i]) / span;
    }
    return fitness;
}

std::vector<double> apply_runner(std::span<const double> x, std::span<const double> dx,
                                 const SearchSpace& space) {
    if (x.size() != dx.size()) throw std::invalid_argument("apply_runner: dimension mismatch");
    std::vector<double> y(x.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
        y[j] = x[j] + (space.upper[j] - space.lower[j]) * dx[j];
    }
    return clamp_to_bounds(std::move(y), space);
}

RunReport run_ppa(const PpaConfig& config, const Problem& problem, EvalBudget& budget) {
    if (config.np < 2) throw std::invalid_argument("ppa: np must be >= 2");
    if (config.n_max < 1) throw std::invalid_argument("ppa: n_max must be >= 1");

    Rng rng(config.seed);
    const SearchSpace& space = problem.space();
    const auto np = static_cast<std::size_t>(config.np);

    Population pop;
    pop.reserve(np);
    while (pop.size() < np) {
        auto c = evaluate_candidate(problem, budget, uniform_init(space, rng), rng);
        if (!c) break;
        pop.push_back(std::move(*c));
    }
    if (pop.empty()) throw std::runtime_error("ppa: budget too small to initialize a population");

    RunReport report;
    report.seed = config.seed;
    report.metadata["algorithm"] = "ppa";
    report.metadata["np"] = std::to_string(config.np);
    report.metadata["n_max"] = std::to_string(config.n_max);
    report.metadata["normalization_eps"] = "1e-06";
    report.metadata["rng"] = kRngAlgorithm;

    sort_ascending(pop);
    report.trajectory.push_back(pop.front().objective);

    // Evolution needs a full population; a truncated init means the budget
    // is already spent and the loop is skipped anyway.
    while (pop.size() == np && budget.can_start_generation()) {
        budget.begin_generation();
        sort_ascending(pop);
        std::vector<double> objectives(pop.size());
        for (std::size_t i = 0; i < pop.size(); ++i) objectives[i] = pop[i].objective;
        const std::vector<double> fitness = normalize_objectives(objectives);

        Population pool = pop; // parents compete with offspring
        bool spent = false;
        for (std::size_t i = 0; i < pop.size() && !spent; ++i) {
            const int runners = runner_count(fitness[i], config.n_max, rng);
            for (int r = 0; r < runners; ++r) {
                auto dx = runner_offset(fitness[i], space.dim(), rng);
                auto c = evaluate_candidate(problem, budget,
                                            apply_runner(pop[i].position, dx, space), rng);
                if (!c) {
                    spent = true;
                    break;
                }
                pool.push_back(std::move(*c));
            }
        }
        select_survivors(pool, np);
        pop = std::move(pool);
        report.trajectory.push_back(pop.front().objective);
    }

    report.best_objective = pop.front().objective;
    report.best_position = pop.front().position;
    report.evaluations = budget.used();
    report.generations = budget.generations();
    return report;
}

} // namespace runnerbench::ppa
