#pragma once

#include "troprank/decomposition.hpp"
#include "troprank/deficiency.hpp"
#include "troprank/execution.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace troprank {

/// First pair (i, j) with 2 M_ij < M_ii + M_jj, if any.
std::optional<Pair> infinite_rank_witness(const SymmetricMatrix& m);
inline bool symmetric_rank_finite(const SymmetricMatrix& m) { return !infinite_rank_witness(m).has_value(); }

struct NormalizedDiagonal {
    SymmetricMatrix matrix;   // zero diagonal
    RowVector offsets;        // M_ii / 2; adding them to a generator undoes the normalization
};
NormalizedDiagonal normalize_diagonal(const SymmetricMatrix& m);

/// Inductive constructions; each result is verified before it is returned.
Decomposition symmetric_upper_decomposition(const SymmetricMatrix& m);
Decomposition star_upper_decomposition(const DissimilarityMatrix& m);
Decomposition tree_upper_decomposition(const DissimilarityMatrix& m);
Decomposition upper_decomposition(const AnyMatrix& m, Notion notion);

/// Proven bound on the constructive decomposition size.
int upper_bound_size(Notion notion, int n);

enum class LowerCertificate { Trivial, Chromatic, Exhaustive, Characterization, None };
std::string to_string(LowerCertificate c);

struct RankOptions {
    int budget = 0;                          // largest r searched; 0 = up to the constructive size minus one
    std::uint64_t max_nodes = 20'000'000;    // assignment-search nodes per value of r
    ColoringLimits coloring{};
    // Start the search at chi(deficiency); off, every r from 1 is searched and
    // the result is independent of the coloring bound.
    bool use_chromatic_bound = true;
};

struct RankResult {
    Notion notion = Notion::SymmetricBarvinok;
    bool infinite = false;
    std::optional<Pair> infinite_witness;
    int lower = 1;
    int upper = 1;
    LowerCertificate lower_certificate = LowerCertificate::None;
    int chromatic = 1;            // chi of the deficiency graph (lower bound)
    bool chromatic_exact = true;  // false if only bounds on chi were found
    std::string method;
    std::optional<Decomposition> decomposition;  // witnesses `upper`

    [[nodiscard]] bool determined() const { return infinite || lower == upper; }
    [[nodiscard]] ExtendedInt value() const;
};

/// Least r with a decomposition into r rank-1 terms, found by assigning every
/// position to one of r summands that attains it and testing each class for a
/// realizing summand.
RankResult exact_rank(const SymmetricMatrix& m, const RankOptions& options = {});
RankResult exact_rank(const DissimilarityMatrix& m, Notion notion, const RankOptions& options = {});
RankResult exact_rank(const AnyMatrix& m, Notion notion, const RankOptions& options = {});

/// Bounds only: deficiency chromatic number and the constructive decomposition.
RankResult rank_bounds(const AnyMatrix& m, Notion notion, const ColoringLimits& coloring = {});

/// Exact ranks of many matrices; the parallel kernel distributes instances over threads.
std::vector<RankResult> exact_rank_batch(std::span<const DissimilarityMatrix> ms, Notion notion, Execution exec,
                                         const RankOptions& options = {});
std::vector<RankResult> exact_rank_batch(std::span<const SymmetricMatrix> ms, Execution exec, const RankOptions& options = {});

/// Unrooted binary leaf-labelled trees on n >= 3 leaves as edge lists
/// (leaves 0..n-1, internal vertices n..2n-3), built by stepwise leaf insertion.
const std::vector<std::vector<std::pair<int, int>>>& binary_topologies(int n);

/// Some tree matrix T >= M with T = M on the positions in `cls`, or nullopt.
std::optional<WeightedTree> tree_class_witness(const DissimilarityMatrix& m, std::span<const int> cls);
/// Generator v with v_i + v_j = M_ij on `cls` and >= M_ij elsewhere, or nullopt.
std::optional<RowVector> symmetric_class_witness(const SymmetricMatrix& m, std::span<const int> cls);
std::optional<RowVector> star_class_witness(const DissimilarityMatrix& m, std::span<const int> cls);

}  // namespace troprank
