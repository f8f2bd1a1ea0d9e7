#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "runnerbench/problem.hpp"

namespace runnerbench::bench {

/// Unimodal/multimodal x separable/non-separable labels as used in the
/// registry listing.
enum class Classification { US, UN, MS, MN, M };

std::string_view to_string(Classification c) noexcept;

/// One registry row: identity, per-coordinate range, classification and
/// the catalogued minimum value.
struct FunctionInfo {
    int id;
    std::string_view name;
    double lower;
    double upper;
    Classification cls;
    double min_value;
    bool stochastic; ///< true only for the noisy quartic (id 6)
    int fixed_dim;   ///< 0 = scales to any dim; 2 for the classic 2-D problems
};

/// The 18 scalable test functions, ids 1..18, in catalogue order.
std::span<const FunctionInfo> catalogue() noexcept;

/// Eight classic two-dimensional problems, ids 101..108, used by the
/// low-dimension comparison suite.
std::span<const FunctionInfo> dim2_catalogue() noexcept;

/// Lookup over both catalogues; throws std::invalid_argument naming the
/// valid ids for an unknown one.
const FunctionInfo& lookup(int id);

/// Instantiate a registry function at the given dimension. Throws for
/// unknown ids and for dimension mismatches on fixed-dimension problems.
Problem make_problem(int id, int dim);

/// Conventional minimizer (origin, all-ones, ...) replicated to dim.
std::vector<double> known_minimizer(int id, int dim);

} // namespace runnerbench::bench
