#include "runnerbench/abc.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace runnerbench::abc {

double fitness_transform(double objective) noexcept {
    return objective >= 0.0 ? 1.0 / (1.0 + objective) : 1.0 + std::abs(objective);
}

namespace {

struct Colony {
    std::vector<FoodSource> sources;
    Candidate best; // best candidate ever evaluated
    std::uint64_t scout_events = 0;

    void observe(const Candidate& c) {
        if (c.objective < best.objective) best = c;
    }

    std::size_t best_source() const {
        std::size_t b = 0;
        for (std::size_t i = 1; i < sources.size(); ++i) {
            if (sources[i].candidate.objective < sources[b].candidate.objective) b = i;
        }
        return b;
    }
};

// Greedy replacement with trial bookkeeping; false once the budget is spent.
bool attempt_move(Colony& colony, std::size_t i, const AbcConfig& config, const Problem& problem,
                  EvalBudget& budget, Rng& rng) {
    const SearchSpace& space = problem.space();
    const std::size_t sn = colony.sources.size();
    std::vector<double> v;
    if (config.variant == Variant::classic) {
        std::size_t partner = static_cast<std::size_t>(rng.below(sn - 1));
        if (partner >= i) ++partner;
        v = neighbor_candidate(colony.sources[i].candidate.position,
                               colony.sources[partner].candidate.position, space, rng);
    } else {
        const std::size_t best = colony.best_source();
        const std::size_t r1 = static_cast<std::size_t>(rng.below(sn));
        std::size_t r2 = static_cast<std::size_t>(rng.below(sn - 1));
        if (r2 >= r1) ++r2;
        v = mabc_candidate(colony.sources[i].candidate.position,
                           colony.sources[best].candidate.position,
                           colony.sources[r1].candidate.position,
                           colony.sources[r2].candidate.position, config.modification_rate, space,
                           rng);
    }
    auto c = evaluate_candidate(problem, budget, std::move(v), rng);
    if (!c) return false;
    colony.observe(*c);
    FoodSource& source = colony.sources[i];
    if (c->objective < source.candidate.objective) {
        source.candidate = std::move(*c);
        source.trials = 0;
    } else {
        ++source.trials;
    }
    return true;
}

} // namespace

RunReport run_abc(const AbcConfig& config, const Problem& problem, EvalBudget& budget) {
    if (config.colony_size < 2) throw std::invalid_argument("abc: colony_size must be >= 2");
    if (config.modification_rate <= 0.0 || config.modification_rate > 1.0) {
        throw std::invalid_argument("abc: modification_rate must be in (0,1]");
    }
    const std::uint64_t limit =
        config.limit != 0
            ? config.limit
            : static_cast<std::uint64_t>(config.colony_size) * static_cast<std::uint64_t>(problem.dim());

    Rng rng(config.seed);
    const SearchSpace& space = problem.space();
    const auto sn = static_cast<std::size_t>(config.colony_size);
    const bool modified = config.variant == Variant::modified;

    Colony colony;
    colony.sources.reserve(sn);
    while (colony.sources.size() < sn) {
        auto c = evaluate_candidate(problem, budget, uniform_init(space, rng), rng);
        if (!c) break;
        colony.sources.push_back({std::move(*c), 0});
    }
    if (colony.sources.empty()) {
        throw std::runtime_error("abc: budget too small to initialize food sources");
    }
    colony.best = colony.sources.front().candidate;
    for (const auto& s : colony.sources) colony.observe(s.candidate);

    RunReport report;
    report.seed = config.seed;
    report.metadata["algorithm"] = modified ? "mabc" : "abc";
    report.metadata["colony_size"] = std::to_string(config.colony_size);
    report.metadata["limit"] = std::to_string(limit);
    report.metadata["fitness_transform"] = "1/(1+f) for f>=0, 1+|f| otherwise";
    report.metadata["rng"] = kRngAlgorithm;
    if (modified) {
        report.metadata["modification_rate"] = std::to_string(config.modification_rate);
    }
    report.trajectory.push_back(colony.best.objective);

    bool spent = colony.sources.size() < sn;
    while (!spent && budget.can_start_generation()) {
        budget.begin_generation();

        // employed phase
        for (std::size_t i = 0; i < sn && !spent; ++i) {
            spent = !attempt_move(colony, i, config, problem, budget, rng);
        }

        // onlooker phase; selection probabilities fixed at phase start
        if (!spent) {
            std::vector<double> fitness(sn);
            for (std::size_t i = 0; i < sn; ++i) {
                fitness[i] = fitness_transform(colony.sources[i].candidate.objective);
            }
            for (std::size_t k = 0; k < sn && !spent; ++k) {
                const std::size_t i = roulette_select(std::span<const double>(fitness), rng);
                spent = !attempt_move(colony, i, config, problem, budget, rng);
            }
        }

        // scout phase, dropped in the modified variant
        if (!spent && !modified) {
            for (auto& source : colony.sources) {
                if (source.trials <= limit) continue;
                auto c = evaluate_candidate(problem, budget, uniform_init(space, rng), rng);
                if (!c) {
                    spent = true;
                    break;
                }
                colony.observe(*c);
                source.candidate = std::move(*c);
                source.trials = 0;
                ++colony.scout_events;
            }
        }

        report.trajectory.push_back(colony.best.objective);
    }

    report.metadata["scout_events"] = std::to_string(colony.scout_events);
    report.best_objective = colony.best.objective;
    report.best_position = colony.best.position;
    report.evaluations = budget.used();
    report.generations = budget.generations();
    return report;
}

} // namespace runnerbench::abc
