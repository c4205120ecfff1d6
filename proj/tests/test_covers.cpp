#include "troprank/covers.hpp"
#include "troprank/generators.hpp"
#include "troprank/rank_engine.hpp"

#include <doctest.h>

using namespace troprank;

namespace {

Graph complete(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

DissimilarityMatrix zero_one(const Graph& g)
{
    DissimilarityMatrix m(g.size(), Rational(1));
    for (const auto& [a, b] : g.edges()) m.set(a, b, 0);
    return m;
}

}  // namespace

TEST_CASE("zero graphs")
{
    const auto g = zero_graph(intro_example());
    CHECK(g.num_edges() == 4);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(1, 3));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(zero_graph(cycle_matrix(5)) == cycle(5));
    CHECK(is_zero_one(cycle_matrix(5)));
    CHECK_FALSE(is_zero_one(min_matrix(4)));
}

TEST_CASE("minimum clique covers of edges and vertices")
{
    CHECK(min_clique_cover(Graph(5)).size() == 5);
    for (int n = 4; n <= 7; ++n) {
        const auto g = zero_graph(bipartite_pattern(n));
        const auto c = min_clique_cover(g);
        CHECK(c.size() == (n * n) / 4);
        CHECK(is_cover(g, c, true));
    }
    CHECK(min_clique_cover(zero_graph(intro_example())).size() == 4);
    CHECK(min_clique_cover(complete(6)).size() == 1);
}

TEST_CASE("symmetric rank of 0/1 matrices")
{
    const auto r = symmetric_rank_01(intro_example());
    CHECK(r.value() == ExtendedInt(4));
    for (int n = 3; n <= 6; ++n) CHECK(symmetric_rank_01(identity_pattern(n)).value() == ExtendedInt(n));

    auto inf = identity_pattern(3);
    inf.set(0, 0, 1);
    inf.set(0, 1, 0);
    const auto ri = symmetric_rank_01(inf);
    CHECK(ri.infinite);
    REQUIRE(ri.infinite_witness.has_value());
    CHECK(*ri.infinite_witness == Pair{0, 1});

    // A one on the diagonal with no zero in its row: one extra all-1/2 generator.
    auto plus = identity_pattern(4);
    plus.set(3, 3, 1);
    const auto rp = symmetric_rank_01(plus);
    CHECK(rp.value() == ExtendedInt(4));
    REQUIRE(rp.decomposition.has_value());
    CHECK(verify(plus, *rp.decomposition).ok);
}

TEST_CASE("clique/star covers")
{
    const auto c5 = min_clique_star_cover(cycle(5));
    CHECK(c5.cover.size() == 3);
    CHECK(is_cover(cycle(5), c5.cover, false));

    const auto intro = min_clique_star_cover(zero_graph(project(intro_example())));
    CHECK(intro.cover.size() == 2);
    CHECK(min_clique_star_cover(complete(5)).cover.size() == 1);
}

TEST_CASE("star tree rank of 0/1 matrices")
{
    const auto intro = star_tree_rank_01(project(intro_example()));
    CHECK(intro.value() == ExtendedInt(2));
    REQUIRE(intro.decomposition.has_value());
    CHECK(verify(project(intro_example()), *intro.decomposition).ok);

    CHECK(star_tree_rank_01(DissimilarityMatrix(5)).value() == ExtendedInt(1));
    const auto ones = star_tree_rank_01(DissimilarityMatrix(4, Rational(1)));
    CHECK(ones.value() == ExtendedInt(1));
    REQUIRE(ones.decomposition.has_value());
    CHECK(verify(DissimilarityMatrix(4, Rational(1)), *ones.decomposition).ok);

    const auto c5 = star_tree_rank_01(cycle_matrix(5));
    CHECK(c5.value() == ExtendedInt(3));
}

TEST_CASE("complete multipartite test")
{
    Graph k23(5);
    for (int a : {0, 1})
        for (int b : {2, 3, 4}) k23.add_edge(a, b);
    CHECK(is_complete_multipartite(k23));
    CHECK(is_complete_multipartite(complete(4)));
    CHECK_FALSE(is_complete_multipartite(cycle(5)));
    CHECK(min_multipartite_cover(k23).size() == 1);
    CHECK(min_multipartite_cover(cycle(5)).size() == 3);
}

TEST_CASE("tree rank of 0/1 matrices")
{
    CHECK(tree_rank_01(cycle_matrix(5)).value() == ExtendedInt(3));
    CHECK(tree_rank_01(project(intro_example())).value() == ExtendedInt(1));

    const auto ones = tree_rank_01(DissimilarityMatrix(4, Rational(1)));
    CHECK(ones.value() == ExtendedInt(1));

    Graph k23(5);
    for (int a : {0, 1})
        for (int b : {2, 3, 4}) k23.add_edge(a, b);
    CHECK(tree_rank_01(zero_one(k23)).value() == ExtendedInt(1));

    for (int n = 5; n <= 7; ++n) {
        const auto m = zero_one(cycle(n));
        const auto r = tree_rank_01(m);
        REQUIRE(r.decomposition.has_value());
        CHECK(verify(m, *r.decomposition).ok);
    }
}

TEST_CASE("cover ranks agree with the exact solver on small graphs")
{
    for (std::uint64_t s = 0; s < 60; ++s) {
        const auto m = random_dissimilarity(5, 0, 1, s);
        const auto star = star_tree_rank_01(m);
        const auto tree = tree_rank_01(m);
        CHECK(star.value() == exact_rank(m, Notion::StarTree).value());
        CHECK(tree.value() == exact_rank(m, Notion::Tree).value());
    }
    for (std::uint64_t s = 0; s < 40; ++s) {
        auto m = random_symmetric(4, 0, 1, s);
        for (int i = 0; i < 4; ++i) m.set(i, i, 0);
        CHECK(symmetric_rank_01(m).value() == exact_rank(m).value());
    }
}

TEST_CASE("covers from a large clique or independent set")
{
    const auto k5 = cover_via_ramsey_witness(complete(5), 5);
    REQUIRE(k5.has_value());
    CHECK(k5->cover.size() == 1);
    CHECK(k5->from_clique);

    const auto c5 = cover_via_ramsey_witness(cycle(5), 2);
    REQUIRE(c5.has_value());
    CHECK(c5->cover.size() <= 4);
    CHECK(is_cover(cycle(5), c5->cover, false));
    CHECK_FALSE(cover_via_ramsey_witness(cycle(5), 3).has_value());

    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto g = zero_graph(random_dissimilarity(18, 0, 1, s));
        const auto r = cover_via_ramsey_witness(g, 4);
        REQUIRE(r.has_value());
        CHECK(r->cover.size() <= 18 - 4 + 1);
        CHECK(is_cover(g, r->cover, false));
    }
}
