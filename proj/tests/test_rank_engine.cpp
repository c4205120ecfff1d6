#include "troprank/classify.hpp"
#include "troprank/generators.hpp"
#include "troprank/io.hpp"
#include "troprank/rank_engine.hpp"

#include <doctest.h>

#include <fstream>

using namespace troprank;

namespace {

Decomposition intro_star_decomposition()
{
    Decomposition d;
    d.notion = Notion::StarTree;
    d.summands.push_back(star_summand({Rational(-1, 2), Rational(3, 2), Rational(1, 2), Rational(1, 2)}));
    d.summands.push_back(star_summand({Rational(3, 2), Rational(-1, 2), Rational(1, 2), Rational(1, 2)}));
    return d;
}

}  // namespace

TEST_CASE("finite rank test")
{
    CHECK(symmetric_rank_finite(intro_example()));
    CHECK(symmetric_rank_finite(rank_one_symmetric(RowVector{4, -2, 9})));
    const auto bad = SymmetricMatrix::from_rows({{0, -1}, {-1, 0}});
    REQUIRE(infinite_rank_witness(bad).has_value());
    CHECK(*infinite_rank_witness(bad) == Pair{0, 1});
    const auto r = exact_rank(bad);
    CHECK(r.infinite);
    CHECK(r.value().is_infinite());
}

TEST_CASE("diagonal normalization")
{
    const auto n = normalize_diagonal(SymmetricMatrix::from_rows({{2, 1}, {1, 4}}));
    CHECK(n.matrix == SymmetricMatrix::from_rows({{0, -2}, {-2, 0}}));
    CHECK(n.offsets == RowVector{1, 2});
    CHECK(normalize_diagonal(intro_example()).matrix == intro_example());
}

TEST_CASE("symmetric construction for n = 2 and n = 3")
{
    const auto d2 = symmetric_upper_decomposition(SymmetricMatrix::from_rows({{0, 3}, {3, 0}}));
    REQUIRE(d2.size() == 2);
    CHECK(std::get<SymmetricMatrix>(d2.summands[0].matrix) == SymmetricMatrix::from_rows({{0, 3}, {3, 6}}));
    CHECK(std::get<SymmetricMatrix>(d2.summands[1].matrix) == SymmetricMatrix::from_rows({{6, 3}, {3, 0}}));

    // M12 >= M23: first summand is explicit, the others agree where finite and pad the rest.
    const auto m3 = SymmetricMatrix::from_rows({{0, 5, 2}, {5, 0, 1}, {2, 1, 0}});
    const auto d3 = symmetric_upper_decomposition(m3);
    REQUIRE(d3.size() == 3);
    CHECK(std::get<SymmetricMatrix>(d3.summands[0].matrix) == SymmetricMatrix::from_rows({{0, 5, 2}, {5, 10, 7}, {2, 7, 4}}));
    const auto& s1 = std::get<SymmetricMatrix>(d3.summands[1].matrix);
    CHECK(s1(1, 1) == 0);
    CHECK(s1(1, 2) == 1);
    CHECK(s1(2, 2) == 2);
    CHECK(s1(0, 0) > 10);
    CHECK(std::get<SymmetricMatrix>(d3.summands[2].matrix)(2, 2) == 0);
    CHECK(verify(m3, d3).ok);
}

TEST_CASE("constructions verify and respect their size bounds")
{
    CHECK(upper_bound_size(Notion::SymmetricBarvinok, 4) == 4);
    CHECK(upper_bound_size(Notion::SymmetricBarvinok, 6) == 9);
    CHECK(upper_bound_size(Notion::StarTree, 7) == 5);
    CHECK(upper_bound_size(Notion::Tree, 9) == 6);

    const auto k22 = bipartite_pattern(4);
    const auto dk = symmetric_upper_decomposition(k22);
    CHECK(dk.size() <= 4);
    CHECK(verify(k22, dk).ok);

    CHECK(star_upper_decomposition(random_dissimilarity(3, 0, 9, 5)).size() == 1);
    CHECK(star_upper_decomposition(project(intro_example())).size() <= 2);
    CHECK(star_upper_decomposition(min_matrix(5)).size() == 3);

    CHECK(tree_upper_decomposition(project(intro_example())).size() == 1);
    const auto d6 = tree_upper_decomposition(tree_rank_six_matrix());
    CHECK(d6.size() == 6);
    CHECK(verify(tree_rank_six_matrix(), d6).ok);

    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto m = random_dissimilarity(6, -5, 9, s);
        const auto d = tree_upper_decomposition(m);
        CHECK(d.size() == 3);
        CHECK(verify(m, d).ok);
        for (const auto& t : d.summands) CHECK(is_tree_matrix(std::get<DissimilarityMatrix>(t.matrix)));
    }
}

TEST_CASE("verify pinpoints a wrong entry")
{
    const auto target = project(intro_example());
    CHECK(verify(target, intro_star_decomposition()).ok);
    auto moved = target;
    moved.set(1, 2, moved(1, 2) + 1);
    const auto rep = verify(moved, intro_star_decomposition());
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.entry.has_value());
    CHECK(*rep.entry == Pair{1, 2});
}

TEST_CASE("exact ranks of the worked examples")
{
    CHECK(exact_rank(intro_example()).value() == ExtendedInt(4));
    CHECK(exact_rank(singular_minors_matrix()).value() == ExtendedInt(4));
    const auto p = project(intro_example());
    const auto star = exact_rank(p, Notion::StarTree);
    CHECK(star.value() == ExtendedInt(2));
    REQUIRE(star.decomposition.has_value());
    CHECK(verify(p, *star.decomposition).ok);
    CHECK(exact_rank(p, Notion::Tree).value() == ExtendedInt(1));
    for (int n = 3; n <= 6; ++n) CHECK(exact_rank(min_matrix(n), Notion::StarTree).value() == ExtendedInt(n - 2));
}

TEST_CASE("exact ranks match the frozen integer-programming oracle")
{
    std::ifstream in(TROPRANK_TEST_DATA "/ranks.json");
    REQUIRE(in.good());
    const auto cases = Json::parse(in);
    REQUIRE(cases.size() >= 30);
    for (const auto& c : cases) {
        const auto rows = c["rows"].get<std::vector<std::vector<long long>>>();
        std::vector<std::vector<Rational>> q;
        for (const auto& r : rows) q.emplace_back(r.begin(), r.end());
        const Notion notion = parse_notion(c["notion"].get<std::string>());
        const int expected = c["rank"].get<int>();
        RankResult r;
        if (notion == Notion::SymmetricBarvinok) r = exact_rank(SymmetricMatrix::from_rows(q));
        else r = exact_rank(DissimilarityMatrix::from_rows(q), notion);
        CHECK(r.value() == ExtendedInt(expected));
        CHECK(auto_rank(notion == Notion::SymmetricBarvinok ? AnyMatrix(SymmetricMatrix::from_rows(q)) : AnyMatrix(DissimilarityMatrix::from_rows(q)),
                        notion)
                  .value() == ExtendedInt(expected));
    }
}

TEST_CASE("bounds and batch kernels")
{
    const auto b = rank_bounds(AnyMatrix(tree_rank_six_matrix()), Notion::Tree);
    CHECK(b.lower == 6);
    CHECK(b.upper == 6);
    CHECK(b.lower_certificate == LowerCertificate::Chromatic);

    std::vector<DissimilarityMatrix> ms;
    for (std::uint64_t s = 0; s < 30; ++s) ms.push_back(random_dissimilarity(5, 0, 4, s));
    const auto serial = exact_rank_batch(ms, Notion::Tree, Execution::Serial);
    const auto parallel = exact_rank_batch(ms, Notion::Tree, Execution::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t k = 0; k < ms.size(); ++k) CHECK(serial[k].upper == parallel[k].upper);
}

TEST_CASE("binary topologies and class witnesses")
{
    CHECK(binary_topologies(4).size() == 3);
    CHECK(binary_topologies(5).size() == 15);
    CHECK(binary_topologies(6).size() == 105);

    const auto m = cycle_matrix(5);
    std::vector<int> all(static_cast<std::size_t>(m.num_positions()));
    for (int k = 0; k < m.num_positions(); ++k) all[static_cast<std::size_t>(k)] = k;
    CHECK_FALSE(tree_class_witness(m, all).has_value());
    CHECK_FALSE(star_class_witness(m, all).has_value());
    const std::vector<int> one{0};
    const auto w = tree_class_witness(m, one);
    REQUIRE(w.has_value());
    CHECK(dominates(w->distances(), m));
    CHECK(w->distances()(0, 1) == m(0, 1));
}

TEST_CASE("block matrices")
{
    const auto m2 = block_matrix_mk(2);
    CHECK(m2.size() == 18);
    CHECK(m2.principal(std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8}) == tree_rank_six_matrix());
    CHECK(m2(0, 17) == 10);
    CHECK(rank_lower_bound(m2, Basis::Pluecker) >= ExtendedInt(12));
}

TEST_CASE("table of maximal tree ranks")
{
    std::ifstream in(TROPRANK_DATA_DIR "/table1.json");
    REQUIRE(in.good());
    const auto table = Json::parse(in);
    int rows = 0;
    for (const auto& row : table["rows"]) {
        if (!row["n"].is_number()) continue;
        const int n = row["n"].get<int>();
        const int lower = row["lower"].get<int>();
        CHECK(row["upper"].get<int>() == upper_bound_size(Notion::Tree, n));
        CHECK((row["status"] == "determined") == (lower == row["upper"].get<int>()));
        if (row["example"].is_object()) {
            const auto& ex = row["example"];
            const auto full = std::get<DissimilarityMatrix>(generate(ex["generator"].get<std::string>(), ex["params"].get<std::vector<long long>>()));
            std::vector<int> idx;
            for (int i : ex["indices"].get<std::vector<int>>()) idx.push_back(i - 1);
            const auto m = full.principal(idx);
            CHECK(m.size() == n);
            CHECK(rank_lower_bound(m, Basis::Pluecker) == ExtendedInt(lower));
            ++rows;
        }
    }
    CHECK(rows == 6);
    // One more index on the 9x9 matrix keeps chi at least 6.
    DissimilarityMatrix ten(10, Rational(20));
    const auto nine = tree_rank_six_matrix();
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j) ten.set(i, j, nine(i, j));
    CHECK(rank_lower_bound(ten, Basis::Pluecker) >= ExtendedInt(6));
}

TEST_CASE("symmetric rank is invariant under normalization and relabeling")
{
    for (std::uint64_t s = 0; s < 40; ++s) {
        auto m = random_symmetric(4, 0, 4, 2100 + s);
        for (int i = 0; i < 4; ++i) {
            Rational low = 4;
            for (int j = 0; j < 4; ++j)
                if (j != i) low = std::min(low, m(i, j));
            m.set(i, i, low - static_cast<int>(s % 3));
        }
        const auto r = exact_rank(m).value();
        CHECK(exact_rank(normalize_diagonal(m).matrix).value() == r);
        const std::vector<int> perm{2, 0, 3, 1};
        CHECK(exact_rank(m.permuted(perm)).value() == r);
    }
}

TEST_CASE("removing an index lowers tree rank by at most one")
{
    for (std::uint64_t s = 0; s < 30; ++s) {
        const auto m = random_dissimilarity(6, 0, 5, 2500 + s);
        const int full = exact_rank(m, Notion::Tree).value().value();
        for (int drop = 0; drop < 6; ++drop) {
            std::vector<int> idx;
            for (int i = 0; i < 6; ++i)
                if (i != drop) idx.push_back(i);
            const int sub = exact_rank(m.principal(idx), Notion::Tree).value().value();
            CHECK(sub <= full);
            CHECK(full <= sub + 1);
        }
    }
}
