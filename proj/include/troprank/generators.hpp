#pragma once

#include "troprank/tree.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace troprank {

/// The 4 x 4 symmetric example with zeros off the two diagonal blocks.
SymmetricMatrix intro_example();
/// M_ij = min(i, j) with 1-based labels.
DissimilarityMatrix min_matrix(int n);
/// Zero diagonal, zeros between the halves of K_{n/2, n/2}, ones inside them.
SymmetricMatrix bipartite_pattern(int n);
/// Zero diagonal, ones elsewhere.
SymmetricMatrix identity_pattern(int n);
/// 0/1 dissimilarity matrix with zeros on the edges of the n-cycle.
DissimilarityMatrix cycle_matrix(int n);
/// The 9 x 9 matrix of tree rank 6 found by random search.
DissimilarityMatrix tree_rank_six_matrix();
/// k copies of the 9 x 9 matrix along the diagonal, 10 elsewhere.
DissimilarityMatrix block_matrix_mk(int k);
/// 4 x 4 symmetric matrix of rank 4 whose 3 x 3 principal submatrices are all singular.
SymmetricMatrix singular_minors_matrix();

SymmetricMatrix random_symmetric(int n, int lo, int hi, std::uint64_t seed);
DissimilarityMatrix random_dissimilarity(int n, int lo, int hi, std::uint64_t seed);
/// Random binary tree by stepwise leaf insertion: pendant weights in [lo, hi],
/// internal weights in [lo - hi, 0].
WeightedTree random_tree(int n, int lo, int hi, std::uint64_t seed);

struct GeneratorInfo {
    std::string name;
    std::string params;
    std::string description;
};
const std::vector<GeneratorInfo>& generator_catalog();

/// Named generator; params are the positional integers listed in the catalog.
AnyMatrix generate(const std::string& name, const std::vector<long long>& params);

}  // namespace troprank
