#include "troprank/generators.hpp"
#include "troprank/rank_engine.hpp"
#include "troprank/small_cases.hpp"

#include <algorithm>

#include <doctest.h>

using namespace troprank;

TEST_CASE("3x3 symmetric rank")
{
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            const auto m = SymmetricMatrix::from_rows({{0, 0, a}, {0, 0, b}, {a, b, 0}});
            const auto r = sym3_rank(m);
            CHECK(r.rank == ExtendedInt(a == 0 && b == 0 ? 1 : 2));
            REQUIRE(r.decomposition.has_value());
            CHECK(verify(m, *r.decomposition).ok);
        }
    CHECK(sym3_rank(rank_one_symmetric(RowVector{1, 7, -3})).rank == ExtendedInt(1));
    CHECK(sym3_rank(SymmetricMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})).rank == ExtendedInt(3));

    const auto inf = sym3_rank(SymmetricMatrix::from_rows({{0, 0, -1}, {0, 0, 0}, {-1, 0, 0}}));
    CHECK(inf.rank.is_infinite());
    REQUIRE(inf.infinite_witness.has_value());
    CHECK(*inf.infinite_witness == Pair{0, 2});
}

TEST_CASE("sym3 agrees with exact search")
{
    for (std::uint64_t s = 0; s < 300; ++s) {
        const auto m = random_symmetric(3, -2, 4, s);
        CHECK(sym3_rank(m).rank == exact_rank(m).value());
    }
}

TEST_CASE("pentad test for star tree rank two")
{
    CHECK(five_cycles().size() == 12);
    CHECK_FALSE(star5_rank2_test(min_matrix(5)).rank_at_most_two);
    CHECK(star5_rank(min_matrix(5)) == 3);

    const auto star = star_tree_matrix(RowVector{3, 1, 4, 1, 5});
    const auto t = star5_rank2_test(star);
    CHECK(t.rank_one);
    CHECK(t.rank_at_most_two);
    CHECK(verify(star, star5_rank2_decompose(star)).ok);
    CHECK_THROWS_AS(star5_rank2_decompose(min_matrix(5)), Error);

    const auto sum = trop_sum(star_tree_matrix(RowVector{0, 3, 1, 4, 2}), star_tree_matrix(RowVector{2, 0, 4, 1, 3}));
    CHECK(star5_rank(sum) <= 2);
    CHECK(verify(sum, star5_rank2_decompose(sum)).ok);
}

TEST_CASE("pentad test agrees with exact search")
{
    int passing = 0;
    for (std::uint64_t s = 0; s < 300; ++s) {
        const auto m = random_dissimilarity(5, 0, 9, s);
        const auto t = star5_rank2_test(m);
        const auto r = exact_rank(m, Notion::StarTree);
        CHECK(t.rank_at_most_two == (r.upper <= 2));
        if (t.rank_at_most_two) {
            ++passing;
            CHECK(verify(m, star5_rank2_decompose(m)).ok);
        }
    }
    CHECK(passing > 0);
}

TEST_CASE("polynomial P")
{
    CHECK(p_terms().size() == 22);
    int triangles = 0;
    for (const auto& t : p_terms()) triangles += t.kind == PTermKind::Triangle;
    CHECK(triangles == 10);
}

TEST_CASE("5x5 tree rank")
{
    const auto c5 = tree5_rank(cycle_matrix(5));
    CHECK(c5.rank == 3);
    REQUIRE(c5.deficiency_cycle.has_value());
    CHECK(c5.deficiency_cycle->size() == 5);

    const auto t = random_tree(5, 0, 9, 4).distances();
    CHECK(tree5_rank(t).rank == 1);
    CHECK(tree5_rank(project(rank_one_symmetric(RowVector{1, 2, 3, 4, 5}))).rank == 1);

    // Every cyclic inequality ties on a constant matrix.
    const DissimilarityMatrix flat(5, Rational(2));
    const auto d = tree5_rank2_decompose(flat);
    REQUIRE(d.has_value());
    CHECK(verify(flat, *d).ok);
}

TEST_CASE("rank two tree decompositions")
{
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto m = trop_sum(random_tree(5, 0, 9, 2 * s).distances(), random_tree(5, 0, 9, 2 * s + 1).distances());
        const auto r = tree5_rank(m);
        CHECK(r.rank <= 2);
        if (r.rank == 2) {
            const auto d = tree5_rank2_decompose(m);
            REQUIRE(d.has_value());
            CHECK(verify(m, *d).ok);
            for (const auto& x : d->summands) CHECK(dominates(std::get<DissimilarityMatrix>(x.matrix), m));
        }
    }
}

TEST_CASE("tree5 agrees with exact search")
{
    for (std::uint64_t s = 0; s < 300; ++s) {
        const auto m = random_dissimilarity(5, 0, 9, s);
        CHECK(ExtendedInt(tree5_rank(m).rank) == exact_rank(m, Notion::Tree).value());
    }
}

TEST_CASE("the three conditions of each small-case characterization coincide")
{
    for (std::uint64_t s = 0; s < 300; ++s) {
        const auto m = random_dissimilarity(5, 0, 9, 900 + s);
        const int rank = tree5_rank(m).rank;
        const auto chi = chromatic_number(build_deficiency(m, Basis::Pluecker)).lower;
        CHECK((rank <= 2) == (chi <= 2));
        CHECK((rank <= 2) == (evaluate_p(m).triangle_minimizer() || rank == 1));
        const auto kind = classify_petersen(m).kind;
        CHECK((rank == 3) == (kind == PetersenClass::FiveCycle));
        CHECK((rank == 1) == (kind == PetersenClass::Trivial));
    }
    for (std::uint64_t s = 0; s < 300; ++s) {
        const auto m = random_symmetric(3, -2, 5, 1300 + s);
        const auto r = sym3_rank(m);
        if (r.rank.is_infinite()) continue;
        const auto chi = chromatic_number(build_deficiency(m)).lower;
        CHECK((r.rank <= ExtendedInt(2)) == (chi <= 2));
    }
}

TEST_CASE("the pentad test does not depend on labels")
{
    std::array<int, 5> sigma{0, 1, 2, 3, 4};
    for (std::uint64_t s = 0; s < 15; ++s) {
        const auto m = random_dissimilarity(5, 0, 5, 1700 + s);
        const bool base = star5_rank2_test(m).rank_at_most_two;
        do {
            CHECK(star5_rank2_test(m.permuted(sigma)).rank_at_most_two == base);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
}
