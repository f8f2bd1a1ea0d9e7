#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "runnerbench/rng.hpp"

namespace runnerbench {

/// Box-constrained search domain: per-coordinate bounds [lower[j], upper[j]].
struct SearchSpace {
    std::vector<double> lower;
    std::vector<double> upper;

    SearchSpace(std::vector<double> lo, std::vector<double> hi);

    static SearchSpace symmetric(double lo, double hi, int dim);

    int dim() const noexcept { return static_cast<int>(lower.size()); }
};

/// A position together with its objective value. Solvers only build
/// candidates from clamped positions, so feasibility holds by construction.
struct Candidate {
    std::vector<double> position;
    double objective = 0.0;

    bool operator==(const Candidate&) const = default;
};

using Population = std::vector<Candidate>;

/// Hard cap on objective evaluations plus the generation counter. The gate
/// sits in front of every evaluation, so a generation can be cut short
/// without ever exceeding max_eval.
class EvalBudget {
public:
    EvalBudget(std::uint64_t max_eval, std::uint64_t max_gen);

    /// Reserve one evaluation. False (and no state change) once spent.
    bool try_consume() noexcept {
        if (n_eval_ >= max_eval_) return false;
        ++n_eval_;
        return true;
    }

    bool exhausted() const noexcept { return n_eval_ >= max_eval_; }
    bool can_start_generation() const noexcept { return n_gen_ < max_gen_ && !exhausted(); }
    void begin_generation() noexcept { ++n_gen_; }

    std::uint64_t used() const noexcept { return n_eval_; }
    std::uint64_t generations() const noexcept { return n_gen_; }
    std::uint64_t max_eval() const noexcept { return max_eval_; }
    std::uint64_t max_gen() const noexcept { return max_gen_; }

private:
    std::uint64_t max_eval_;
    std::uint64_t max_gen_;
    std::uint64_t n_eval_ = 0;
    std::uint64_t n_gen_ = 0;
};

/// Generation cap when evaluations are meant to be the binding stop.
inline constexpr std::uint64_t kGenerationSentinel = 2147483647;

/// Fresh position with every coordinate drawn uniformly inside its bounds.
template <UniformSource R>
std::vector<double> uniform_init(const SearchSpace& space, R& rng) {
    std::vector<double> x(space.lower.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = space.lower[j] + (space.upper[j] - space.lower[j]) * rng.uniform01();
    }
    return x;
}

/// Coordinate-wise projection onto the domain; identity on feasible input.
std::vector<double> clamp_to_bounds(std::vector<double> y, const SearchSpace& space);

/// Stable sort by objective; ties keep their relative order.
void sort_ascending(Population& pop);

/// Keep the np best members, sorted ascending. A smaller population than
/// np signals a harness bug and throws.
void select_survivors(Population& pop, std::size_t np);

/// Everything a single solver run reports back.
struct RunReport {
    double best_objective = 0.0;
    std::vector<double> best_position;
    std::uint64_t evaluations = 0;
    std::uint64_t generations = 0;
    std::vector<double> trajectory; ///< best-so-far after init and after each generation
    std::uint64_t seed = 0;
    std::map<std::string, std::string> metadata; ///< resolved parameters, key-sorted

    bool operator==(const RunReport&) const = default;
};

} // namespace runnerbench
