#include "troprank/generators.hpp"

#include <random>

namespace troprank {

SymmetricMatrix intro_example()
{
    return SymmetricMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

DissimilarityMatrix min_matrix(int n)
{
    if (n < 3) throw Error("min matrix needs n >= 3");
    DissimilarityMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.set(i, j, Rational(i + 1));
    return m;
}

SymmetricMatrix bipartite_pattern(int n)
{
    if (n < 1) throw Error("bipartite pattern needs n >= 1");
    SymmetricMatrix m(n);
    const int half = n / 2;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.set(i, j, Rational((i < half) == (j < half) ? 1 : 0));
    return m;
}

SymmetricMatrix identity_pattern(int n)
{
    if (n < 1) throw Error("identity pattern needs n >= 1");
    SymmetricMatrix m(n, Rational(1));
    for (int i = 0; i < n; ++i) m.set(i, i, Rational(0));
    return m;
}

DissimilarityMatrix cycle_matrix(int n)
{
    if (n < 3) throw Error("cycle matrix needs n >= 3");
    DissimilarityMatrix m(n, Rational(1));
    for (int i = 0; i < n; ++i) m.set(i, (i + 1) % n, Rational(0));
    return m;
}

DissimilarityMatrix tree_rank_six_matrix()
{
    return DissimilarityMatrix::from_rows({{0, 1, 6, 7, 2, 3, 8, 9, 6},
                                           {1, 0, 2, 7, 9, 7, 5, 7, 1},
                                           {6, 2, 0, 6, 0, 6, 1, 7, 1},
                                           {7, 7, 6, 0, 3, 3, 8, 5, 3},
                                           {2, 9, 0, 3, 0, 5, 7, 5, 7},
                                           {3, 7, 6, 3, 5, 0, 9, 3, 9},
                                           {8, 5, 1, 8, 7, 9, 0, 2, 3},
                                           {9, 7, 7, 5, 5, 3, 2, 0, 8},
                                           {6, 1, 1, 3, 7, 9, 3, 8, 0}});
}

DissimilarityMatrix block_matrix_mk(int k)
{
    if (k < 1) throw Error("block matrix needs k >= 1");
    const auto base = tree_rank_six_matrix();
    DissimilarityMatrix m(9 * k, Rational(10));
    for (int b = 0; b < k; ++b)
        for (int i = 0; i < 9; ++i)
            for (int j = i + 1; j < 9; ++j) m.set(9 * b + i, 9 * b + j, base(i, j));
    return m;
}

SymmetricMatrix singular_minors_matrix()
{
    return SymmetricMatrix::from_rows({{0, 0, 1, 2}, {0, 0, 2, 1}, {1, 2, 0, 0}, {2, 1, 0, 0}});
}

SymmetricMatrix random_symmetric(int n, int lo, int hi, std::uint64_t seed)
{
    if (n < 1 || lo > hi) throw Error("random matrix needs n >= 1 and lo <= hi");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(lo, hi);
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, Rational(d(rng)));
    return m;
}

DissimilarityMatrix random_dissimilarity(int n, int lo, int hi, std::uint64_t seed)
{
    if (n < 3 || lo > hi) throw Error("random dissimilarity matrix needs n >= 3 and lo <= hi");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(lo, hi);
    DissimilarityMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.set(i, j, Rational(d(rng)));
    return m;
}

WeightedTree random_tree(int n, int lo, int hi, std::uint64_t seed)
{
    if (n < 3 || lo > hi) throw Error("random tree needs n >= 3 and lo <= hi");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges{{0, n}, {1, n}, {2, n}};
    int next = n + 1;
    for (int leaf = 3; leaf < n; ++leaf) {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        const auto [u, v] = edges[pick(rng)];
        const int x = next++;
        std::erase(edges, std::pair<int, int>{u, v});
        edges.insert(edges.end(), {{u, x}, {x, v}, {leaf, x}});
    }
    std::uniform_int_distribution<int> pendant(lo, hi);
    std::uniform_int_distribution<int> internal(lo - hi, 0);
    std::vector<TreeEdge> weighted;
    for (const auto& [u, v] : edges) weighted.push_back({u, v, Rational(u < n || v < n ? pendant(rng) : internal(rng))});
    return WeightedTree(n, next, std::move(weighted));
}

const std::vector<GeneratorInfo>& generator_catalog()
{
    static const std::vector<GeneratorInfo> catalog{
        {"intro-exs", "[diss]", "4x4 symmetric example of symmetric rank 4; 'diss' as first param (1) gives its projection"},
        {"min", "n", "dissimilarity matrix M_ij = min(i, j), star tree rank n - 2"},
        {"bipartite", "n", "0/1 symmetric matrix of K_{n/2,n/2}, symmetric rank floor(n^2/4)"},
        {"identity-pattern", "n", "0/1 symmetric matrix with zero diagonal and ones elsewhere, symmetric rank n"},
        {"cycle", "n", "0/1 dissimilarity matrix with zeros on the n-cycle"},
        {"tr6", "", "9x9 dissimilarity matrix of tree rank 6"},
        {"tr6-blocks", "k", "9k x 9k block matrix M_k, tree rank at least 6k"},
        {"sym6-remark", "", "4x4 symmetric matrix of rank 4 with singular 3x3 principal submatrices"},
        {"random-tree", "n lo hi seed", "distance matrix of a seeded random binary tree"},
        {"random", "n lo hi seed [sym]", "seeded random integer dissimilarity matrix; trailing 1 gives a symmetric one"},
    };
    return catalog;
}

namespace {

int param(const std::vector<long long>& p, std::size_t k, const std::string& name)
{
    if (k >= p.size()) throw Error("generator '" + name + "' needs more parameters");
    return static_cast<int>(p[k]);
}

}  // namespace

AnyMatrix generate(const std::string& name, const std::vector<long long>& p)
{
    if (name == "intro-exs") {
        if (!p.empty() && p[0] != 0) return project(intro_example());
        return intro_example();
    }
    if (name == "min") return min_matrix(param(p, 0, name));
    if (name == "bipartite") return bipartite_pattern(param(p, 0, name));
    if (name == "identity-pattern") return identity_pattern(param(p, 0, name));
    if (name == "cycle") return cycle_matrix(param(p, 0, name));
    if (name == "tr6") return tree_rank_six_matrix();
    if (name == "tr6-blocks") return block_matrix_mk(param(p, 0, name));
    if (name == "sym6-remark") return singular_minors_matrix();
    if (name == "random-tree")
        return random_tree(param(p, 0, name), param(p, 1, name), param(p, 2, name), static_cast<std::uint64_t>(param(p, 3, name))).distances();
    if (name == "random") {
        const int n = param(p, 0, name);
        const int lo = param(p, 1, name);
        const int hi = param(p, 2, name);
        const auto seed = static_cast<std::uint64_t>(param(p, 3, name));
        if (p.size() > 4 && p[4] != 0) return random_symmetric(n, lo, hi, seed);
        return random_dissimilarity(n, lo, hi, seed);
    }
    throw Error("unknown generator '" + name + "'");
}

}  // namespace troprank
