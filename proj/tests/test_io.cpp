#include "troprank/classify.hpp"
#include "troprank/generators.hpp"
#include "troprank/io.hpp"

#include <doctest.h>

using namespace troprank;

TEST_CASE("matrix files round-trip")
{
    const auto text = "# projected example\ndissimilarity 4\n* 1 0 0\n1 * 0 0\n0 0 * 1\n0 0 1 *\n";
    const auto m = parse_matrix(text);
    REQUIRE(std::holds_alternative<DissimilarityMatrix>(m));
    CHECK(std::get<DissimilarityMatrix>(m) == project(intro_example()));
    CHECK(parse_matrix(format_matrix(m)) == m);

    const auto s = parse_matrix("symmetric 2\n1/2 -3\n-3 0.25\n");
    const auto& sm = std::get<SymmetricMatrix>(s);
    CHECK(sm(0, 0) == Rational(1, 2));
    CHECK(sm(1, 1) == Rational(1, 4));
    CHECK(parse_matrix(format_matrix(s)) == s);
}

TEST_CASE("malformed matrix files")
{
    CHECK_THROWS_AS(parse_matrix("symmetric 2\n0 1\n2 0\n"), Error);
    CHECK_THROWS_AS(parse_matrix("symmetric 2\n0 1\n"), Error);
    CHECK_THROWS_AS(parse_matrix("matrix 2\n0 1\n1 0\n"), Error);
    CHECK_THROWS_AS(parse_matrix("dissimilarity 3\n* 1 x\n1 * 2\nx 2 *\n"), std::exception);
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/file"), Error);
}

TEST_CASE("generators reproduce the worked matrices")
{
    const auto tr6 = std::get<DissimilarityMatrix>(generate("tr6", {}));
    CHECK(tr6(0, 1) == 1);
    CHECK(tr6(0, 8) == 6);
    CHECK(tr6(7, 8) == 8);
    CHECK(tr6(4, 6) == 7);
    const auto min5 = std::get<DissimilarityMatrix>(generate("min", {5}));
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) CHECK(min5(i, j) == i + 1);
    CHECK(std::get<DissimilarityMatrix>(generate("cycle", {5})) == cycle_matrix(5));
    CHECK(std::holds_alternative<SymmetricMatrix>(generate("random", {4, 0, 3, 9, 1})));
    CHECK(generate("random", {6, 0, 3, 9}) == generate("random", {6, 0, 3, 9}));
    CHECK_THROWS_AS(generate("nope", {}), Error);
    CHECK_THROWS_AS(generate("min", {}), Error);
}

TEST_CASE("rank results as JSON")
{
    const auto r = auto_rank(AnyMatrix(project(intro_example())), Notion::Tree);
    const auto j = to_json(r);
    CHECK(j["notion"] == "tree");
    CHECK(j["rank"] == 1);
    CHECK(j["determined"] == true);
    const auto& summand = j["decomposition"]["summands"][0];
    CHECK(summand["tree"].contains("newick"));

    const auto inf = to_json(exact_rank(SymmetricMatrix::from_rows({{0, -1, 0}, {-1, 0, 0}, {0, 0, 0}})));
    CHECK(inf["rank"] == "infinity");
    CHECK(inf["infinite_witness"] == Json::array({1, 2}));
}

TEST_CASE("decompositions survive a JSON round trip")
{
    const auto sym = intro_example();
    const auto ds = symmetric_upper_decomposition(sym);
    CHECK(verify(sym, decomposition_from_json(to_json(ds))).ok);

    const auto m = tree_rank_six_matrix();
    const auto dt = tree_upper_decomposition(m);
    const auto back = decomposition_from_json(Json::parse(to_json(dt).dump()));
    CHECK(back.size() == 6);
    CHECK(verify(m, back).ok);

    const auto p = project(intro_example());
    const auto star = star_upper_decomposition(p);
    CHECK(verify(p, decomposition_from_json(to_json(star))).ok);
}

TEST_CASE("dimension reports as JSON")
{
    DimensionReport r;
    r.notion = Notion::StarTree;
    r.n = 5;
    r.r = 2;
    r.formula_value = 9;
    r.sampled_value = 9;
    const auto j = to_json(r);
    CHECK(j["matches"] == true);
    CHECK(j["formula"] == 9);
}
