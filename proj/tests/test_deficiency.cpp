#include "troprank/deficiency.hpp"
#include "troprank/generators.hpp"
#include "troprank/small_cases.hpp"

#include <doctest.h>

#include <set>

using namespace troprank;

namespace {

// Petersen vertex of a pair written with 1-based labels.
int pv(int a, int b) { return petersen_vertex(a - 1, b - 1); }

std::set<std::vector<int>> as_set(const DeficiencyHypergraph& h) { return {h.hyperedges.begin(), h.hyperedges.end()}; }

}  // namespace

TEST_CASE("minors deficiency of the symmetric example")
{
    // Frozen from a separate enumeration of all 2x2 minors: 16 edges on 8 positions, chi 4.
    const auto h = build_deficiency(intro_example());
    CHECK(h.hyperedges.size() == 16);
    CHECK_FALSE(h.loop_vertex().has_value());
    for (const auto& e : h.hyperedges) CHECK(e.size() == 2);
    const auto chi = chromatic_number(h);
    CHECK(chi.exact);
    CHECK(chi.lower == 4);
    CHECK(rank_lower_bound(intro_example()) == ExtendedInt(4));
}

TEST_CASE("star tree deficiency of the min matrix: overlapping and nesting edges")
{
    const int n = 6;
    const auto m = min_matrix(n);
    const auto h = build_deficiency(m, Basis::StarTree);
    std::set<std::vector<int>> expected;
    auto edge = [&](int a, int b, int c, int d) {
        std::vector<int> e{m.position_index(a, b), m.position_index(c, d)};
        std::sort(e.begin(), e.end());
        expected.insert(e);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    edge(i, k, j, l);
                    edge(i, l, j, k);
                }
    CHECK(as_set(h) == expected);
}

TEST_CASE("points on the variety have no deficiency")
{
    CHECK(build_deficiency(rank_one_symmetric(RowVector{1, 5, 2, 7})).empty());
    CHECK(build_deficiency(star_tree_matrix(RowVector{1, 5, 2, 7, 0}), Basis::StarTree).empty());
    const auto t = random_tree(7, 0, 9, 3).distances();
    const auto h = build_deficiency(t, Basis::Pluecker);
    CHECK(h.empty());
    CHECK(chromatic_number(h).lower == 1);
    CHECK(rank_lower_bound(t, Basis::Pluecker) == ExtendedInt(1));
}

TEST_CASE("serial and parallel builds agree")
{
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto m = random_dissimilarity(8, 0, 9, s);
        const auto a = build_deficiency(m, Basis::Pluecker, Execution::Serial);
        const auto b = build_deficiency(m, Basis::Pluecker, Execution::Parallel);
        CHECK(a.hyperedges == b.hyperedges);
        CHECK(a.sources == b.sources);
    }
}

TEST_CASE("chromatic lower bounds")
{
    CHECK(rank_lower_bound(project(intro_example()), Basis::StarTree) == ExtendedInt(2));
    const auto h = build_deficiency(tree_rank_six_matrix(), Basis::Pluecker);
    const auto chi = chromatic_number(h);
    CHECK(chi.exact);
    CHECK(chi.lower == 6);
    CHECK(is_proper_coloring(h.graph(), chi.colors));
}

TEST_CASE("a violated diagonal inequality is a loop and gives infinite rank")
{
    const auto m = SymmetricMatrix::from_rows({{0, -1}, {-1, 0}});
    const auto h = build_deficiency(m);
    REQUIRE(h.loop_vertex().has_value());
    CHECK(*h.loop_vertex() == m.position_index(0, 1));
    const auto chi = chromatic_number(h);
    CHECK(chi.infinite);
    CHECK(rank_lower_bound(m).is_infinite());
}

TEST_CASE("the five-cycle matrix has a five-cycle deficiency graph")
{
    const auto m = cycle_matrix(5);
    const auto h = build_deficiency(m, Basis::Pluecker);
    CHECK(h.hyperedges.size() == 5);
    CHECK(chromatic_number(h).lower == 3);
    const auto c = classify_petersen(m);
    CHECK(c.kind == PetersenClass::FiveCycle);
    // One edge for each pair of non-adjacent cycle edges.
    for (const auto& [a, b] : c.edges) CHECK(petersen_graph().adjacent(a, b));
}

TEST_CASE("Petersen classification")
{
    CHECK(classify_petersen(min_matrix(5)).kind == PetersenClass::Trivial);

    // One entry of a generic tree matrix moved by one breaks few quadruples.
    auto t = random_tree(5, 1, 9, 11).distances();
    t.set(0, 1, t(0, 1) + 1);
    CHECK(classify_petersen(t).kind == PetersenClass::FewerThan5Edges);

    const auto a = classify_petersen_graph(type_a_edges());
    CHECK(a.kind == PetersenClass::Figure3TypeA);
    REQUIRE(a.relabeling.has_value());
    CHECK(classify_petersen_graph(type_b_edges()).kind == PetersenClass::Figure3TypeB);

    // A perfect matching of the Petersen graph is not a deficiency shape.
    const std::vector<std::pair<int, int>> matching{{pv(1, 2), pv(3, 4)}, {pv(1, 3), pv(2, 5)}, {pv(1, 4), pv(3, 5)},
                                                    {pv(1, 5), pv(2, 4)}, {pv(2, 3), pv(4, 5)}};
    CHECK(classify_petersen_graph(matching).kind == PetersenClass::Other);
    CHECK_THROWS_AS(classify_petersen_graph({{pv(1, 2), pv(1, 3)}}), Error);
}

TEST_CASE("alternating even cycles")
{
    // Solid edges 45-13, 25-34, 15-23 inside the 6-cycle 45 13 25 34 15 23.
    const std::vector<std::pair<int, int>> h{{pv(4, 5), pv(1, 3)}, {pv(2, 5), pv(3, 4)}, {pv(1, 5), pv(2, 3)}};
    const auto cyc = alternating_even_cycle(h);
    REQUIRE(cyc.has_value());
    CHECK((cyc->size() == 6 || cyc->size() == 8));
    CHECK_FALSE(has_alternating_even_cycle({}));
    for (std::uint64_t s = 0; s < 200; ++s) CHECK_FALSE(has_alternating_even_cycle(classify_petersen(random_dissimilarity(5, 0, 9, s)).edges));
}

TEST_CASE("dot export")
{
    const auto dot = to_dot(build_deficiency(cycle_matrix(5), Basis::Pluecker));
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}
