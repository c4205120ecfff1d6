#pragma once

#include "troprank/matrix.hpp"

#include <span>
#include <string>
#include <vector>

namespace troprank {

struct TreeEdge {
    int u = 0;
    int v = 0;
    Rational weight;
};

/// Leaf-labelled weighted tree. Vertices 0..n-1 are the leaves (leaf i is
/// vertex i), vertices n.. are internal. Pendant weights are unconstrained;
/// internal edges carry weights <= 0.
class WeightedTree {
public:
    WeightedTree() = default;
    WeightedTree(int num_leaves, int num_vertices, std::vector<TreeEdge> edges);

    /// Star with center vertex n and pendant weight v_i on leaf i; its distance matrix is pi(v^T v).
    static WeightedTree star(std::span<const Rational> pendant);

    [[nodiscard]] int num_leaves() const { return num_leaves_; }
    [[nodiscard]] int num_vertices() const { return num_vertices_; }
    [[nodiscard]] const std::vector<TreeEdge>& edges() const { return edges_; }
    [[nodiscard]] bool is_leaf(int vertex) const { return vertex < num_leaves_; }

    /// Throws Error unless connected, acyclic, leaves of degree 1 and internal weights <= 0.
    void validate() const;
    [[nodiscard]] bool is_valid() const;

    /// Path-length distances from `vertex` to every vertex.
    [[nodiscard]] std::vector<Rational> distances_from(int vertex) const;
    /// Pairwise leaf distances.
    [[nodiscard]] DissimilarityMatrix distances() const;

    /// Newick string rooted at the first internal vertex, leaves labelled 1..n.
    [[nodiscard]] std::string to_newick() const;

private:
    [[nodiscard]] std::vector<std::vector<std::pair<int, Rational>>> adjacency() const;

    int num_leaves_ = 0;
    int num_vertices_ = 0;
    std::vector<TreeEdge> edges_;
};

/// Realizes a tree matrix as a weighted tree whose leaf distances equal M exactly.
/// Zero-weight internal edges are contracted. Throws Error if M fails the four-point test.
WeightedTree realize_tree(const DissimilarityMatrix& m);

/// Tree on n leaves whose leaves `indices[k]` realize the k-th leaf of `tree`, and
/// whose remaining leaves hang off one internal vertex so every new entry is >= c.
WeightedTree embed_tree(const WeightedTree& tree, std::span<const int> indices, int n, const Rational& c);

/// Tree matrix on n indices whose leading block is M and whose other entries are >= c.
DissimilarityMatrix extend_tree(const DissimilarityMatrix& m, int n, const Rational& c);

}  // namespace troprank
