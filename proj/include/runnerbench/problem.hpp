#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "runnerbench/core.hpp"

namespace runnerbench {

/// An objective bound to its search space. The callable receives the run's
/// RNG so noisy objectives stay seed-reproducible.
class Problem {
public:
    using Objective = std::function<double(std::span<const double>, Rng&)>;

    Problem(int id, std::string name, SearchSpace space, Objective objective,
            double known_min = 0.0, bool stochastic = false);

    /// Throws on dimension mismatch. Feasibility is the caller's job.
    double evaluate(std::span<const double> x, Rng& rng) const;

    int id() const noexcept { return id_; }
    const std::string& name() const noexcept { return name_; }
    const SearchSpace& space() const noexcept { return space_; }
    int dim() const noexcept { return space_.dim(); }
    double known_min() const noexcept { return known_min_; }
    bool stochastic() const noexcept { return stochastic_; }

private:
    int id_;
    std::string name_;
    SearchSpace space_;
    Objective objective_;
    double known_min_;
    bool stochastic_;
};

/// Budget-gated evaluation: the budget is checked before the objective runs.
/// Returns nothing once the budget is spent; throws if the objective yields
/// a non-finite value.
std::optional<Candidate> evaluate_candidate(const Problem& problem, EvalBudget& budget,
                                            std::vector<double> position, Rng& rng);

} // namespace runnerbench
