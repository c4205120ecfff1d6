#pragma once

#include "troprank/execution.hpp"
#include "troprank/graph.hpp"
#include "troprank/matrix.hpp"
#include "troprank/membership.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace troprank {

/// Vertices are the coordinate positions of the ambient space; one hyperedge
/// per distinct unique-minimizer term. Loops are hyperedges of size 1.
struct DeficiencyHypergraph {
    Basis basis = Basis::SymmetricMinors;
    int n = 0;
    int num_vertices = 0;
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<int>> hyperedges;       // sorted, deduplicated
    std::vector<std::vector<std::string>> sources;  // polynomials producing each hyperedge

    [[nodiscard]] bool empty() const { return hyperedges.empty(); }
    [[nodiscard]] std::optional<int> loop_vertex() const;
    /// Simple graph on the vertices from the size-2 hyperedges.
    [[nodiscard]] Graph graph() const;
};

const std::vector<TropicalPolynomial>& cached_basis(Basis basis, int n);

DeficiencyHypergraph build_deficiency(const SymmetricMatrix& m, Basis basis = Basis::SymmetricMinors, Execution exec = Execution::Serial);
DeficiencyHypergraph build_deficiency(const DissimilarityMatrix& m, Basis basis, Execution exec = Execution::Serial);

struct ChromaticNumber {
    bool infinite = false;
    int loop_vertex = -1;
    int lower = 1;
    int upper = 1;
    bool exact = true;
    std::vector<int> colors;  // proper coloring with `upper` colors when finite

    /// Exact value; throws Error when only bounds are known.
    [[nodiscard]] ExtendedInt value() const;
    /// Certified lower bound.
    [[nodiscard]] ExtendedInt lower_bound() const { return infinite ? ExtendedInt::infinity() : ExtendedInt(lower); }
};

ChromaticNumber chromatic_number(const DeficiencyHypergraph& h, const ColoringLimits& limits = {});

ExtendedInt rank_lower_bound(const SymmetricMatrix& m, Basis basis = Basis::SymmetricMinors);
ExtendedInt rank_lower_bound(const DissimilarityMatrix& m, Basis basis);

/// Vertex index of pair {i, j} of [5] among the 10 Petersen vertices (dissimilarity order).
int petersen_vertex(int i, int j);
/// The Petersen graph: pairs of [5], adjacent when disjoint.
const Graph& petersen_graph();

enum class PetersenClass { Trivial, FewerThan5Edges, Figure3TypeA, Figure3TypeB, FiveCycle, Other };
std::string to_string(PetersenClass c);

struct PetersenClassification {
    PetersenClass kind = PetersenClass::Trivial;
    std::vector<std::pair<int, int>> edges;  // Petersen vertex indices
    /// For types A and B: sigma with sigma(canonical graph) = the deficiency graph.
    std::optional<std::array<int, 5>> relabeling;
};

/// Canonical edge lists for the two 2-colorable five-edge types.
const std::vector<std::pair<int, int>>& type_a_edges();
const std::vector<std::pair<int, int>>& type_b_edges();

PetersenClassification classify_petersen(const DissimilarityMatrix& m);
/// Same classification for an arbitrary edge set of the Petersen graph.
PetersenClassification classify_petersen_graph(const std::vector<std::pair<int, int>>& edges);

/// A 6- or 8-cycle of the Petersen graph whose edges alternate in / not in H
/// (returned as its vertex sequence), if any. Throws if H has a non-Petersen edge.
std::optional<std::vector<int>> alternating_even_cycle(const std::vector<std::pair<int, int>>& h);
inline bool has_alternating_even_cycle(const std::vector<std::pair<int, int>>& h) { return alternating_even_cycle(h).has_value(); }

/// Graphviz rendering; loops appear as self-edges.
std::string to_dot(const DeficiencyHypergraph& h);

}  // namespace troprank
