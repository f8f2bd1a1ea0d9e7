#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "runnerbench/problem.hpp"

namespace runnerbench::abc {

enum class Variant { classic, modified };

struct AbcConfig {
    int colony_size = 38;           ///< SN, number of food sources, >= 2
    std::uint64_t limit = 0;        ///< abandonment threshold; 0 resolves to SN * dim
    std::uint64_t seed = 1;
    Variant variant = Variant::classic;
    double modification_rate = 0.4; ///< per-coordinate change probability (modified only)
};

/// A candidate with its count of consecutive failed improvements.
struct FoodSource {
    Candidate candidate;
    std::uint64_t trials = 0;
};

/// Single-coordinate move toward/away from a partner source.
template <UniformSource R>
std::vector<double> neighbor_candidate(std::span<const double> x, std::span<const double> partner,
                                       const SearchSpace& space, R& rng) {
    std::vector<double> v(x.begin(), x.end());
    const std::size_t j = static_cast<std::size_t>(rng.below(x.size()));
    v[j] = x[j] + rng.uniform_sym() * (x[j] - partner[j]);
    return clamp_to_bounds(std::move(v), space);
}

/// Best-guided move: each coordinate flips to best_j + phi*(r1_j - r2_j)
/// with probability `rate`; one randomly chosen coordinate always flips.
template <UniformSource R>
std::vector<double> mabc_candidate(std::span<const double> x, std::span<const double> best,
                                   std::span<const double> r1, std::span<const double> r2,
                                   double rate, const SearchSpace& space, R& rng) {
    if (rate <= 0.0 || rate > 1.0) throw std::invalid_argument("mabc: rate must be in (0,1]");
    std::vector<double> v(x.begin(), x.end());
    const std::size_t forced = static_cast<std::size_t>(rng.below(x.size()));
    for (std::size_t j = 0; j < v.size(); ++j) {
        const bool change = rng.uniform01() < rate;
        if (change || j == forced) {
            v[j] = best[j] + rng.uniform_sym() * (r1[j] - r2[j]);
        }
    }
    return clamp_to_bounds(std::move(v), space);
}

/// Fitness used by onlooker roulette: 1/(1+f) for f >= 0, 1+|f| otherwise.
double fitness_transform(double objective) noexcept;

/// Index drawn with probability proportional to its fitness value.
template <UniformSource R>
std::size_t roulette_select(std::span<const double> fitness, R& rng) {
    double total = 0.0;
    for (double f : fitness) total += f;
    const double u = rng.uniform01() * total;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < fitness.size(); ++i) {
        cumulative += fitness[i];
        if (u < cumulative) return i;
    }
    return fitness.size() - 1;
}

RunReport run_abc(const AbcConfig& config, const Problem& problem, EvalBudget& budget);

} // namespace runnerbench::abc
