#pragma once

#include "troprank/matrix.hpp"
#include "troprank/membership.hpp"
#include "troprank/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace troprank {

enum class Notion { SymmetricBarvinok, StarTree, Tree };

std::string to_string(Notion n);
/// Accepts "sym", "star", "tree" and the full names.
Notion parse_notion(std::string_view name);
Basis basis_for(Notion n);

/// One rank-1 term: its matrix plus whichever generator describes it.
struct Summand {
    AnyMatrix matrix;
    std::optional<RowVector> generator;  // v with matrix = v^T v (or its projection)
    std::optional<WeightedTree> tree;    // tree whose leaf distances are the matrix
};

Summand symmetric_summand(RowVector v);
Summand star_summand(RowVector v);
/// Realizes the tree; throws if m is not a tree matrix.
Summand tree_summand(const DissimilarityMatrix& m);
Summand tree_summand(WeightedTree t);

struct Decomposition {
    Notion notion = Notion::SymmetricBarvinok;
    std::vector<Summand> summands;
    std::vector<std::string> notes;  // e.g. padding retries

    [[nodiscard]] int size() const { return static_cast<int>(summands.size()); }
};

struct VerifyReport {
    bool ok = true;
    std::string message;
    std::optional<int> summand;
    std::optional<Pair> entry;
};

/// Every summand lies on its variety (and agrees with its generator), and the
/// tropical sum equals the target exactly.
VerifyReport verify(const SymmetricMatrix& target, const Decomposition& d);
VerifyReport verify(const DissimilarityMatrix& target, const Decomposition& d);
VerifyReport verify(const AnyMatrix& target, const Decomposition& d);

/// Converts star-tree or tree summands to tree summands with realized trees.
Decomposition as_tree_decomposition(const Decomposition& d);

}  // namespace troprank
