#include "troprank/generators.hpp"
#include "troprank/graph.hpp"
#include "troprank/membership.hpp"
#include "troprank/tree.hpp"

#include <doctest.h>

using namespace troprank;

namespace {

RowVector vec(std::initializer_list<Rational> xs) { return RowVector(xs); }

DissimilarityMatrix diss(std::vector<std::vector<Rational>> rows) { return DissimilarityMatrix::from_rows(rows); }

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -3) == Rational(-1, 3));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(7, 2).half() == Rational(7, 4));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("2.25") == Rational(9, 4));
    CHECK(Rational(5, 2).to_string() == "5/2");
    CHECK(Rational(-4).to_string() == "-4");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::exception);
}

TEST_CASE("packed matrices: positions, principal submatrices, permutations")
{
    const auto m = intro_example();
    CHECK(m.size() == 4);
    CHECK(m.num_positions() == 10);
    CHECK(m.position(1) == Pair{0, 1});
    const auto d = project(m);
    CHECK(d.num_positions() == 6);
    CHECK(d.position(0) == Pair{0, 1});
    CHECK(d(0, 1) == 1);
    CHECK(d(2, 3) == 1);
    CHECK(d(0, 2) == 0);

    const std::vector<int> idx{2, 3, 0};
    const auto p = d.principal(idx);
    CHECK(p(0, 1) == d(2, 3));
    CHECK(p(1, 2) == d(3, 0));

    const std::vector<int> perm{1, 0, 3, 2};
    CHECK(d.permuted(perm) == d);
    CHECK_THROWS_AS(SymmetricMatrix::from_rows({{0, 1}, {2, 0}}), Error);
}

TEST_CASE("tropical sum is idempotent and absorbs dominated summands")
{
    const auto a = min_matrix(5);
    CHECK(trop_sum(a, a) == a);
    auto b = a;
    for (int k = 0; k < b.num_positions(); ++k) {
        const auto q = b.position(k);
        b.set(q.i, q.j, a(q.i, q.j) + 1);
    }
    CHECK(trop_sum(a, b) == a);
    CHECK(dominates(b, a));
    CHECK_FALSE(dominates(a, b));
}

TEST_CASE("the explicit two-term star tree sum gives the projected example")
{
    const auto first = diss({{0, 1, 0, 0}, {1, 0, 2, 2}, {0, 2, 0, 1}, {0, 2, 1, 0}});
    const auto second = diss({{0, 1, 2, 2}, {1, 0, 0, 0}, {2, 0, 0, 1}, {2, 0, 1, 0}});
    CHECK(trop_sum(first, second) == project(intro_example()));
    CHECK(is_star_tree(first));
    CHECK(is_star_tree(second));
    CHECK(star_tree_generator(first) == vec({Rational(-1, 2), Rational(3, 2), Rational(1, 2), Rational(1, 2)}));
}

TEST_CASE("rank one symmetric matrices")
{
    CHECK(rank_one_symmetric(vec({0, 0, 0})) == SymmetricMatrix(3));
    CHECK(rank_one_symmetric(vec({0, 1})) == SymmetricMatrix::from_rows({{0, 1}, {1, 2}}));
    const auto m = rank_one_symmetric(vec({2, 3, 1}));
    CHECK(m(0, 0) == 4);
    CHECK(m(1, 1) == 6);
    CHECK(m(0, 2) == 3);
    CHECK(is_rank1_symmetric(m));
    CHECK(rank_one_generator(m) == vec({2, 3, 1}));
    CHECK(is_star_tree(project(rank_one_symmetric(vec({5, -1, 2, 0, 7})))));
}

TEST_CASE("projection")
{
    CHECK(project(SymmetricMatrix(5)) == DissimilarityMatrix(5));
    CHECK_THROWS_AS(project(SymmetricMatrix(2)), Error);
}

TEST_CASE("rank one extension keeps the block and dominates c")
{
    const auto e = extend_rank_one(SymmetricMatrix::from_rows({{0}}), 2, Rational(10));
    CHECK(e == SymmetricMatrix::from_rows({{0, 10}, {10, 20}}));

    const auto m = rank_one_symmetric(vec({1, -2, 3}));
    const auto big = extend_rank_one(m, 6, Rational(50));
    CHECK(is_rank1_symmetric(big));
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) {
            if (j < 3) CHECK(big(i, j) == m(i, j));
            else CHECK(big(i, j) >= 50);
        }
}

TEST_CASE("star tree and tree extensions")
{
    const auto s = star_tree_matrix(vec({0, 2, 1}));
    const auto e = extend_star_tree(s, 5, Rational(30));
    CHECK(is_star_tree(e));
    CHECK(e.principal(std::vector<int>{0, 1, 2}) == s);
    CHECK(e(0, 4) >= 30);
    CHECK(e(3, 4) >= 30);

    const auto t = extend_tree(min_matrix(4), 7, Rational(40));
    CHECK(is_tree_matrix(t));
    CHECK(t.principal(std::vector<int>{0, 1, 2, 3}) == min_matrix(4));
    for (int i = 0; i < 7; ++i)
        for (int j = std::max(i + 1, 4); j < 7; ++j) CHECK(t(i, j) >= 40);
}

TEST_CASE("padding a partial generator")
{
    const std::vector<int> idx{1, 3};
    const auto v = pad_generator(vec({2, -4}), idx, 4, Rational(10));
    REQUIRE(v.size() == 4);
    CHECK(v[1] == 2);
    CHECK(v[3] == -4);
    // max{c/2, c - min v} = max{5, 14}
    CHECK(v[0] == 14);
    CHECK(v[2] == 14);
}

TEST_CASE("tree realization reproduces distances")
{
    const auto d = project(intro_example());
    const auto t = realize_tree(d);
    CHECK(t.is_valid());
    CHECK(t.distances() == d);
    CHECK_FALSE(t.to_newick().empty());

    const auto caterpillar = realize_tree(min_matrix(5));
    CHECK(caterpillar.distances() == min_matrix(5));
    for (const auto& e : caterpillar.edges())
        if (!caterpillar.is_leaf(e.u) && !caterpillar.is_leaf(e.v)) CHECK(e.weight <= 0);

    const auto star = WeightedTree::star(vec({1, 2, 3, 4}));
    CHECK(star.distances() == star_tree_matrix(vec({1, 2, 3, 4})));
    CHECK_THROWS_AS(realize_tree(cycle_matrix(5)), Error);
}

TEST_CASE("random trees are valid tree metrics")
{
    for (std::uint64_t s = 1; s <= 20; ++s) {
        const auto t = random_tree(8, 0, 9, s);
        CHECK(t.is_valid());
        CHECK(is_tree_matrix(t.distances()));
        CHECK(realize_tree(t.distances()).distances() == t.distances());
    }
}

TEST_CASE("graph coloring")
{
    Graph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    const auto r = color_graph(c5);
    CHECK(r.exact);
    CHECK(r.lower == 3);
    CHECK(is_proper_coloring(c5, r.colors));
    CHECK(maximum_clique(c5).size() == 2);
    CHECK(maximal_cliques(c5).size() == 5);

    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    CHECK(color_graph(k4).lower == 4);
    CHECK(color_graph(Graph(3)).lower == 1);
    CHECK(k4.complement().num_edges() == 0);
}
