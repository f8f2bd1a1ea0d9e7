#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "runnerbench/problem.hpp"

namespace runnerbench::ppa {

struct PpaConfig {
    int np = 10;   ///< population size, >= 2
    int n_max = 5; ///< most runners one plant may send, >= 1
    std::uint64_t seed = 1;
};

inline constexpr double kNormalizationEps = 1e-6;

/// Min-max map of raw objectives into (0,1): the best (lowest) objective
/// lands near 1, the worst near eps. A flat population maps to 0.5.
std::vector<double> normalize_objectives(std::span<const double> objectives);

/// Runners for one plant: ceil(n_max * fitness * alpha) with a fresh
/// uniform alpha, never fewer than one.
template <UniformSource R>
int runner_count(double fitness, int n_max, R& rng) {
    const double alpha = rng.uniform01();
    const auto k = static_cast<int>(std::ceil(static_cast<double>(n_max) * fitness * alpha));
    return std::clamp(k, 1, n_max);
}

/// Per-coordinate offsets in [-(1-fitness), (1-fitness)]: fitter plants
/// send shorter runners.
template <UniformSource R>
std::vector<double> runner_offset(double fitness, int dim, R& rng) {
    std::vector<double> dx(static_cast<std::size_t>(dim));
    for (auto& v : dx) {
        v = 2.0 * (1.0 - fitness) * (rng.uniform01() - 0.5);
    }
    return dx;
}

/// One bound-scaled step from x, clamped back into the domain.
std::vector<double> apply_runner(std::span<const double> x, std::span<const double> dx,
                                 const SearchSpace& space);

RunReport run_ppa(const PpaConfig& config, const Problem& problem, EvalBudget& budget);

} // namespace runnerbench::ppa
