#pragma once

#include "troprank/decomposition.hpp"
#include "troprank/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace troprank {

/// G_M: an edge between i != j exactly when M_ij = 0.
Graph zero_graph(const SymmetricMatrix& m);
Graph zero_graph(const DissimilarityMatrix& m);

bool is_zero_one(const SymmetricMatrix& m);
bool is_zero_one(const DissimilarityMatrix& m);

enum class CoverKind { Clique, Star, Multipartite };
std::string to_string(CoverKind k);

struct CoverElement {
    CoverKind kind = CoverKind::Clique;
    std::vector<int> vertices;               // clique
    int center = -1;                         // star
    std::vector<int> leaves;                 // star
    std::vector<std::vector<int>> parts;     // multipartite

    static CoverElement clique(std::vector<int> vertices);
    static CoverElement star(int center, std::vector<int> leaves);
    static CoverElement multipartite(std::vector<std::vector<int>> parts);

    /// Edges of the element, each with i < j, sorted.
    [[nodiscard]] std::vector<std::pair<int, int>> edges() const;
    /// Every vertex the element touches (clique members, center and leaves, union of parts).
    [[nodiscard]] std::vector<int> footprint() const;
};

struct Cover {
    std::vector<CoverElement> elements;
    [[nodiscard]] int size() const { return static_cast<int>(elements.size()); }
};

/// True if every element lies in G and the elements cover every edge
/// (and every vertex when `vertices_too`).
bool is_cover(const Graph& g, const Cover& c, bool vertices_too);

/// The four pairwise conditions making a clique/star cover solid.
bool is_solid(const Graph& g, const Cover& c);

/// Among vertices touching an edge, non-adjacency is transitive.
bool is_complete_multipartite(const Graph& g);

/// Exact minimum covers. Graphs are limited to 22 vertices (12 for multipartite covers).
Cover min_clique_cover(const Graph& g);

struct CliqueStarCover {
    Cover cover;
    bool solid = false;  // some minimum cover is solid; `cover` is then that one
};
CliqueStarCover min_clique_star_cover(const Graph& g);

Cover min_multipartite_cover(const Graph& g);

/// Rank of a 0/1 matrix read off a graph cover.
struct ZeroOneRank {
    Notion notion = Notion::SymmetricBarvinok;
    bool infinite = false;
    std::optional<Pair> infinite_witness;
    int lower = 1;
    int upper = 1;
    Cover cover;
    bool solid = false;
    // Star tree rank: no minimum cover is solid, yet the rank equals the cover size.
    bool weakening_example = false;
    std::string method;
    std::optional<Decomposition> decomposition;  // witnesses `upper`

    [[nodiscard]] bool determined() const { return infinite || lower == upper; }
    [[nodiscard]] ExtendedInt value() const;
};

ZeroOneRank symmetric_rank_01(const SymmetricMatrix& m);

struct StarRank01Options {
    // When no minimum cover is solid the rank is r or r + 1; matrices up to
    // this size are settled by the exact solver.
    int resolve_up_to_n = 7;
};
ZeroOneRank star_tree_rank_01(const DissimilarityMatrix& m, const StarRank01Options& options = {});

ZeroOneRank tree_rank_01(const DissimilarityMatrix& m);

/// Star tree decomposition of a 0/1 matrix from a clique/star cover, with the
/// all-ones term appended when `add_all_ones`.
Decomposition star_cover_decomposition(int n, const Cover& c, bool add_all_ones);
/// Tree decomposition from a multipartite cover (hub construction).
Decomposition multipartite_cover_decomposition(int n, const Cover& c, bool add_all_ones);

struct RamseyCover {
    Cover cover;
    bool from_clique = false;  // else from an independent set
    std::vector<int> witness;  // the clique or independent set
    bool solid = false;
};
/// Cover of size at most n - k + 1 from a k-clique or k-independent set of G, if one exists.
std::optional<RamseyCover> cover_via_ramsey_witness(const Graph& g, int k);

}  // namespace troprank
