#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "runnerbench/benchmarks.hpp"
#include "runnerbench/problem.hpp"

namespace runnerbench::test {

/// Plays back a scripted list of doubles for uniform01/uniform_sym and a
/// scripted list of integers for below(); lets tests pin exact draws.
struct ScriptedRng {
    std::deque<double> reals;
    std::deque<std::uint64_t> integers;

    double uniform01() { return next_real(); }
    double uniform_sym() { return next_real(); }
    std::uint64_t below(std::uint64_t) { return next_integer(); }

    double next_real() {
        if (reals.empty()) throw std::logic_error("ScriptedRng: out of real draws");
        const double v = reals.front();
        reals.pop_front();
        return v;
    }

    std::uint64_t next_integer() {
        if (integers.empty()) throw std::logic_error("ScriptedRng: out of integer draws");
        const std::uint64_t v = integers.front();
        integers.pop_front();
        return v;
    }
};

/// Registry problem whose objective counts calls and rejects infeasible
/// input, for budget-parity and feasibility-closure checks.
inline Problem counting_problem(int id, int dim, std::uint64_t& counter,
                                bool check_feasible = true) {
    auto inner = std::make_shared<Problem>(bench::make_problem(id, dim));
    return Problem(
        inner->id(), inner->name(), inner->space(),
        [&counter, inner, check_feasible](std::span<const double> x, Rng& rng) {
            ++counter;
            if (check_feasible) {
                const SearchSpace& space = inner->space();
                for (std::size_t j = 0; j < x.size(); ++j) {
                    if (x[j] < space.lower[j] || x[j] > space.upper[j]) {
                        throw std::logic_error("infeasible point reached the objective");
                    }
                }
            }
            return inner->evaluate(x, rng);
        },
        inner->known_min(), inner->stochastic());
}

} // namespace runnerbench::test
