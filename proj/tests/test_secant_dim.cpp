#include "troprank/secant_dim.hpp"

#include <doctest.h>

using namespace troprank;

TEST_CASE("dimension formulas")
{
    CHECK(choose2(5) == 10);
    CHECK(choose2(1) == 0);
    CHECK(choose2(0) == 0);
    CHECK(ambient_dimension(Notion::SymmetricBarvinok, 4) == 10);
    CHECK(ambient_dimension(Notion::Tree, 6) == 15);

    CHECK(dimension_formula(Notion::SymmetricBarvinok, 4, 1) == 4);
    CHECK(dimension_formula(Notion::SymmetricBarvinok, 4, 2) == 7);
    CHECK(dimension_formula(Notion::Tree, 5, 2) == 10);
    CHECK(dimension_formula(Notion::Tree, 6, 2) == 14);
    CHECK(dimension_formula(Notion::StarTree, 5, 2) == 9);
    CHECK(dimension_formula(Notion::StarTree, 5, 3) == 10);
    CHECK(dimension_formula(Notion::StarTree, 4, 1) == 4);
}

TEST_CASE("sampled local dimensions of small secant sets")
{
    CHECK(sampled_local_dimension(Notion::SymmetricBarvinok, 4, 2, 5, 1).sampled_value == 7);
    CHECK(sampled_local_dimension(Notion::StarTree, 5, 2, 5, 1).sampled_value == 9);
    CHECK(sampled_local_dimension(Notion::Tree, 6, 2, 5, 1).sampled_value == 14);
    CHECK(sampled_local_dimension(Notion::SymmetricBarvinok, 4, 1, 5, 1).sampled_value == 4);
}

TEST_CASE("serial and parallel trials agree")
{
    const auto a = sampled_local_dimension(Notion::Tree, 7, 3, 6, 42, Execution::Serial);
    const auto b = sampled_local_dimension(Notion::Tree, 7, 3, 6, 42, Execution::Parallel);
    CHECK(a.sampled_value == b.sampled_value);
    CHECK(a.stable_trials == b.stable_trials);
    CHECK(a.matches());
}

TEST_CASE("grid covers every r")
{
    const auto g = dimension_grid(Notion::StarTree, 4, 5, 3, 7);
    CHECK(g.size() == 4 + 5);
    for (const auto& r : g) CHECK(r.matches());
}
