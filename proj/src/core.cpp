#include "runnerbench/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace runnerbench {

SearchSpace::SearchSpace(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.empty() || lower.size() != upper.size()) {
        throw std::invalid_argument("search space needs matching, non-empty bound vectors");
    }
    for (std::size_t j = 0; j < lower.size(); ++j) {
        if (!(lower[j] < upper[j])) {
            throw std::invalid_argument("search space requires lower[j] < upper[j]");
        }
    }
}

SearchSpace SearchSpace::symmetric(double lo, double hi, int dim) {
    if (dim < 1) throw std::invalid_argument("search space dimension must be >= 1");
    return SearchSpace(std::vector<double>(static_cast<std::size_t>(dim), lo),
                       std::vector<double>(static_cast<std::size_t>(dim), hi));
}

EvalBudget::EvalBudget(std::uint64_t max_eval, std::uint64_t max_gen)
    : max_eval_(max_eval), max_gen_(max_gen) {
    if (max_eval_ == 0 || max_gen_ == 0) {
        throw std::invalid_argument("evaluation budget requires max_eval >= 1 and max_gen >= 1");
    }
}

std::vector<double> clamp_to_bounds(std::vector<double> y, const SearchSpace& space) {
    if (y.size() != space.lower.size()) {
        throw std::invalid_argument("clamp_to_bounds: dimension mismatch");
    }
    for (std::size_t j = 0; j < y.size(); ++j) {
        y[j] = std::min(std::max(y[j], space.lower[j]), space.upper[j]);
    }
    return y;
}

void sort_ascending(Population& pop) {
    std::stable_sort(pop.begin(), pop.end(),
                     [](const Candidate& a, const Candidate& b) { return a.objective < b.objective; });
}

void select_survivors(Population& pop, std::size_t np) {
    if (pop.size() < np) {
        throw std::logic_error("select_survivors: population smaller than np");
    }
    sort_ascending(pop);
    pop.resize(np);
}

} // namespace runnerbench
