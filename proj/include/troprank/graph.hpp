#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace troprank {

/// Simple undirected graph on vertices 0..n-1 with a dense adjacency matrix.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    [[nodiscard]] int size() const { return n_; }
    void add_edge(int u, int v);
    [[nodiscard]] bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u * n_ + v)] != 0; }
    [[nodiscard]] const std::vector<int>& neighbors(int u) const { return nbrs_[static_cast<std::size_t>(u)]; }
    [[nodiscard]] int degree(int u) const { return static_cast<int>(nbrs_[static_cast<std::size_t>(u)].size()); }
    [[nodiscard]] int num_edges() const { return num_edges_; }
    [[nodiscard]] std::vector<std::pair<int, int>> edges() const;

    /// Subgraph induced on `vertices`; vertex k of the result is vertices[k].
    [[nodiscard]] Graph induced(std::span<const int> vertices) const;
    [[nodiscard]] Graph complement() const;
    /// Connected components, each sorted, ordered by smallest vertex.
    [[nodiscard]] std::vector<std::vector<int>> components() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    int num_edges_ = 0;
    std::vector<char> adj_;
    std::vector<std::vector<int>> nbrs_;
};

struct ColoringLimits {
    std::uint64_t max_nodes = 50'000'000;  // branch-and-bound nodes per connected piece
};

/// Exact (when `exact`) vertex coloring. colors[v] is in [0, upper).
struct ColoringResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::vector<int> colors;
    std::uint64_t nodes = 0;
};

/// Chromatic number by DSATUR branch and bound with a clique lower bound.
/// Splits disconnected graphs (max over parts) and joins (sum over
/// complement components) before searching.
ColoringResult color_graph(const Graph& g, const ColoringLimits& limits = {});

/// Maximum clique by branch and bound (exact for the graph sizes used here).
std::vector<int> maximum_clique(const Graph& g);
/// A clique of exactly `size` vertices, if one exists.
std::optional<std::vector<int>> find_clique(const Graph& g, int size);

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

bool is_proper_coloring(const Graph& g, std::span<const int> colors);

}  // namespace troprank
