#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "runnerbench/problem.hpp"

namespace runnerbench::mppa {

struct MppaConfig {
    int np = 75;       ///< population size, >= 2
    int n_runners = 5; ///< fixed runners per plant per generation, >= 1
    std::uint64_t seed = 1;
};

/// Which perturbation produced a step.
enum class Perturbation : std::uint8_t { self_scaled = 5, upper_scaled = 6, lower_scaled = 7 };

struct TraceRecord {
    std::uint32_t generation;
    std::uint8_t equation; ///< 5, 6 or 7
    double magnitude;      ///< |y_j - x_j| after clamping, one record per coordinate
};

struct PerturbationTrace {
    std::vector<TraceRecord> records;
};

/// Short runner: each coordinate moves by a random fraction of itself, so
/// steps shrink as the coordinate approaches zero.
template <UniformSource R>
std::vector<double> perturb_self(std::span<const double> x, const SearchSpace& space, R& rng) {
    std::vector<double> y(x.begin(), x.end());
    for (auto& v : y) v += rng.uniform_sym() * v;
    return clamp_to_bounds(std::move(y), space);
}

/// Long runner scaled by the upper bounds.
template <UniformSource R>
std::vector<double> perturb_upper(std::span<const double> x, const SearchSpace& space, R& rng) {
    std::vector<double> y(x.begin(), x.end());
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += rng.uniform_sym() * space.upper[j];
    return clamp_to_bounds(std::move(y), space);
}

/// Long runner scaled by the lower bounds.
template <UniformSource R>
std::vector<double> perturb_lower(std::span<const double> x, const SearchSpace& space, R& rng) {
    std::vector<double> y(x.begin(), x.end());
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += rng.uniform_sym() * space.lower[j];
    return clamp_to_bounds(std::move(y), space);
}

/// One plant's propagation pass: n_runners short runners, each escalating
/// through the two long-runner moves while the previous candidate failed
/// to improve on the parent (a tie counts as no improvement). Every
/// evaluated candidate is returned, improving or not; the pass stops as
/// soon as the budget runs out.
std::vector<Candidate> propagate_individual(const Candidate& parent, const Problem& problem,
                                            EvalBudget& budget, Rng& rng, int n_runners,
                                            std::uint32_t generation,
                                            PerturbationTrace* trace = nullptr);

RunReport run_mppa(const MppaConfig& config, const Problem& problem, EvalBudget& budget,
                   PerturbationTrace* trace = nullptr);

/// Per-equation histogram of step magnitudes over [0, max-magnitude].
struct EquationHistogram {
    int equation;
    double bin_width;
    double max_magnitude;
    std::vector<std::uint64_t> counts;
};

struct TraceHistogram {
    int bins;
    std::vector<EquationHistogram> equations; ///< only equations present, ordered 5,6,7
};

/// Throws on an empty trace or bins < 1.
TraceHistogram trace_histogram(const PerturbationTrace& trace, int bins);

/// Mean step magnitude of one equation restricted to generations in
/// [gen_lo, gen_hi]; returns 0 when no record matches.
double mean_magnitude(const PerturbationTrace& trace, int equation, std::uint32_t gen_lo,
                      std::uint32_t gen_hi);

void write_trace_csv(std::ostream& out, const PerturbationTrace& trace);
PerturbationTrace read_trace_csv(std::istream& in);

} // namespace runnerbench::mppa
