#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "runnerbench/core.hpp"
#include "runnerbench/problem.hpp"
#include "support.hpp"

using namespace runnerbench;
using test::ScriptedRng;

TEST_CASE("search space validation") {
    CHECK_THROWS_AS(SearchSpace({1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(SearchSpace({1.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(SearchSpace({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(SearchSpace({0.0, 0.0}, {1.0}), std::invalid_argument);
    const auto space = SearchSpace::symmetric(-5.0, 5.0, 3);
    CHECK(space.dim() == 3);
    CHECK(space.lower == std::vector<double>{-5.0, -5.0, -5.0});
}

TEST_CASE("uniform_init follows the affine rule") {
    const auto unit2 = SearchSpace::symmetric(0.0, 1.0, 2);
    ScriptedRng zeros{{0.0, 0.0}, {}};
    CHECK(uniform_init(unit2, zeros) == std::vector<double>{0.0, 0.0});

    const auto sym1 = SearchSpace::symmetric(-5.0, 5.0, 1);
    ScriptedRng mid{{0.5}, {}};
    CHECK(uniform_init(sym1, mid) == std::vector<double>{0.0});

    const auto wide3 = SearchSpace::symmetric(-100.0, 100.0, 3);
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const auto x = uniform_init(wide3, rng);
        for (double v : x) {
            REQUIRE(v >= -100.0);
            REQUIRE(v <= 100.0);
        }
    }
}

TEST_CASE("clamp_to_bounds projects coordinate-wise") {
    const auto space = SearchSpace::symmetric(-100.0, 100.0, 2);
    CHECK(clamp_to_bounds({150.0, -3.0}, space) == std::vector<double>{100.0, -3.0});
    CHECK(clamp_to_bounds({-101.0, -101.0}, space) == std::vector<double>{-100.0, -100.0});
    CHECK(clamp_to_bounds({0.0, 0.0}, space) == std::vector<double>{0.0, 0.0});
}

TEST_CASE("clamp_to_bounds feasibility fuzz") {
    Rng rng(11);
    for (int i = 0; i < 100000; ++i) {
        const int dim = 1 + static_cast<int>(rng.below(6));
        std::vector<double> lo(static_cast<std::size_t>(dim)), hi(lo.size()), y(lo.size());
        for (std::size_t j = 0; j < lo.size(); ++j) {
            lo[j] = rng.uniform(-1000.0, 999.0);
            hi[j] = lo[j] + rng.uniform(1e-6, 500.0);
            y[j] = rng.uniform(-2000.0, 2000.0);
        }
        const SearchSpace space(lo, hi);
        const auto clamped = clamp_to_bounds(y, space);
        for (std::size_t j = 0; j < clamped.size(); ++j) {
            REQUIRE(clamped[j] >= space.lower[j]);
            REQUIRE(clamped[j] <= space.upper[j]);
        }
    }
}

namespace {

Population make_population(std::initializer_list<double> objectives) {
    Population pop;
    double tag = 0.0;
    for (double f : objectives) {
        pop.push_back({{tag}, f}); // position[0] tags insertion order
        tag += 1.0;
    }
    return pop;
}

} // namespace

TEST_CASE("sort_ascending is stable") {
    auto pop = make_population({3.0, 1.0, 2.0});
    sort_ascending(pop);
    CHECK(pop[0].objective == 1.0);
    CHECK(pop[1].objective == 2.0);
    CHECK(pop[2].objective == 3.0);

    auto tied = make_population({5.0, 5.0, 1.0}); // labels A=0, B=1, C=2
    sort_ascending(tied);
    CHECK(tied[0].position[0] == 2.0);
    CHECK(tied[1].position[0] == 0.0);
    CHECK(tied[2].position[0] == 1.0);

    auto sorted = make_population({1.0, 2.0, 3.0});
    auto again = sorted;
    sort_ascending(again);
    CHECK(again == sorted);
}

TEST_CASE("select_survivors keeps the np best by rank") {
    auto pop = make_population({6.0, 4.0, 2.0, 5.0, 1.0, 3.0});
    select_survivors(pop, 3);
    REQUIRE(pop.size() == 3);
    CHECK(pop[0].objective == 1.0);
    CHECK(pop[1].objective == 2.0);
    CHECK(pop[2].objective == 3.0);

    auto exact = make_population({2.0, 1.0});
    select_survivors(exact, 2);
    CHECK(exact.size() == 2);
    CHECK(exact[0].objective == 1.0);

    auto dup = make_population({1.0, 1.0, 9.0});
    select_survivors(dup, 2);
    CHECK(dup[0].objective == 1.0);
    CHECK(dup[1].objective == 1.0);

    auto small = make_population({1.0});
    CHECK_THROWS_AS(select_survivors(small, 2), std::logic_error);
}

TEST_CASE("sort/select composition never loses the minimum") {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        Population pop;
        const std::size_t size = 2 + rng.below(40);
        double lo = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < size; ++i) {
            const double f = rng.uniform(-100.0, 100.0);
            lo = std::min(lo, f);
            pop.push_back({{0.0}, f});
        }
        const std::size_t np = 1 + rng.below(size);
        sort_ascending(pop);
        select_survivors(pop, np);
        CHECK(pop.front().objective == lo);
    }
}

TEST_CASE("try_consume gates and counts exactly") {
    EvalBudget one(1, 1);
    CHECK(one.try_consume());
    CHECK(one.used() == 1);
    CHECK_FALSE(one.try_consume());
    CHECK(one.used() == 1);

    EvalBudget budget(150000, 1);
    std::uint64_t granted = 0;
    for (int i = 0; i < 150000 + 137; ++i) {
        if (budget.try_consume()) ++granted;
    }
    CHECK(granted == 150000);
    CHECK(budget.used() == 150000);

    CHECK_THROWS_AS(EvalBudget(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(EvalBudget(1, 0), std::invalid_argument);
}

TEST_CASE("non-finite objectives abort the run") {
    const SearchSpace space = SearchSpace::symmetric(-1.0, 1.0, 1);
    const Problem bad(0, "bad", space,
                      [](std::span<const double>, Rng&) { return std::numeric_limits<double>::quiet_NaN(); });
    EvalBudget budget(10, 10);
    Rng rng(1);
    CHECK_THROWS_AS(evaluate_candidate(bad, budget, {0.0}, rng), std::runtime_error);

    const Problem inf(0, "inf", space,
                      [](std::span<const double>, Rng&) { return std::numeric_limits<double>::infinity(); });
    CHECK_THROWS_AS(evaluate_candidate(inf, budget, {0.0}, rng), std::runtime_error);
}

TEST_CASE("evaluate_candidate respects the budget gate") {
    const SearchSpace space = SearchSpace::symmetric(-1.0, 1.0, 1);
    std::uint64_t calls = 0;
    const Problem p(0, "count", space, [&calls](std::span<const double> x, Rng&) {
        ++calls;
        return x[0];
    });
    EvalBudget budget(2, 10);
    Rng rng(1);
    CHECK(evaluate_candidate(p, budget, {0.5}, rng).has_value());
    CHECK(evaluate_candidate(p, budget, {0.25}, rng).has_value());
    CHECK_FALSE(evaluate_candidate(p, budget, {0.125}, rng).has_value());
    CHECK(calls == 2); // the gated call never reached the objective
    CHECK(budget.used() == 2);
}
