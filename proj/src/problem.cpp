#include "runnerbench/problem.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace runnerbench {

Problem::Problem(int id, std::string name, SearchSpace space, Objective objective,
                 double known_min, bool stochastic)
    : id_(id),
      name_(std::move(name)),
      space_(std::move(space)),
      objective_(std::move(objective)),
      known_min_(known_min),
      stochastic_(stochastic) {
    if (!objective_) throw std::invalid_argument("problem requires an objective");
}

double Problem::evaluate(std::span<const double> x, Rng& rng) const {
    if (static_cast<int>(x.size()) != dim()) {
        throw std::invalid_argument("objective '" + name_ + "' expects dimension " +
                                    std::to_string(dim()) + ", got " + std::to_string(x.size()));
    }
    return objective_(x, rng);
}

std::optional<Candidate> evaluate_candidate(const Problem& problem, EvalBudget& budget,
                                            std::vector<double> position, Rng& rng) {
    if (!budget.try_consume()) return std::nullopt;
    const double f = problem.evaluate(position, rng);
    if (!std::isfinite(f)) {
        throw std::runtime_error("objective '" + problem.name() + "' returned a non-finite value");
    }
    return Candidate{std::move(position), f};
}

} // namespace runnerbench
