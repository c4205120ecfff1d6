#pragma once

#include "troprank/decomposition.hpp"

#include <array>
#include <optional>
#include <vector>

namespace troprank {

struct Sym3Result {
    ExtendedInt rank = ExtendedInt(1);
    std::optional<Pair> infinite_witness;
    std::optional<Decomposition> decomposition;  // for ranks 1 and 2
};

/// Symmetric Barvinok rank of a 3 x 3 matrix from tropical singularity.
Sym3Result sym3_rank(const SymmetricMatrix& m);

/// A 5-cycle on [5] as a vertex sequence starting at 0.
using FiveCycle = std::array<int, 5>;

/// The 12 five-cycles of K5, one per pentad term.
const std::vector<FiveCycle>& five_cycles();

struct PentadEvaluation {
    std::vector<Rational> values;  // sum of M over the cycle edges, per five_cycles() entry
    std::vector<int> minimizers;
};
PentadEvaluation evaluate_pentad(const DissimilarityMatrix& m);

struct Star5Witness {
    int term_a = 0;  // indices into five_cycles()
    int term_b = 0;
    std::array<int, 5> relabeling{};  // sigma: canonical label k sits at index sigma[k]
};

struct Star5Test {
    bool rank_one = false;
    bool rank_at_most_two = false;
    std::optional<Star5Witness> witness;
};

/// Star tree rank <= 2 test for 5 x 5 matrices via the pentad minimizers.
Star5Test star5_rank2_test(const DissimilarityMatrix& m);
/// Two-term star tree decomposition; throws Error if the test fails.
Decomposition star5_rank2_decompose(const DissimilarityMatrix& m);
/// 1, 2 or 3.
int star5_rank(const DissimilarityMatrix& m);

enum class PTermKind { Pentagon, Triangle };

struct PTerm {
    PTermKind kind = PTermKind::Pentagon;
    FiveCycle cycle{};                  // pentagon
    std::array<int, 3> triangle{};      // triangle {i, j, k}; the other two indices form the repeated pair
    std::array<int, 2> pair{};
};

/// The 22 terms of P: 12 pentagons and 10 triangles.
const std::vector<PTerm>& p_terms();

struct PEvaluation {
    std::vector<Rational> values;
    std::vector<int> minimizers;
    [[nodiscard]] bool triangle_minimizer() const;
};
PEvaluation evaluate_p(const DissimilarityMatrix& m);

struct Tree5Result {
    int rank = 1;
    std::optional<Decomposition> decomposition;        // ranks 1 and 2
    std::optional<std::vector<int>> deficiency_cycle;  // rank 3: the 5-cycle (Petersen vertices)
};

/// Tree rank of a 5 x 5 matrix from the minimizers of P.
Tree5Result tree5_rank(const DissimilarityMatrix& m);
/// Two-term tree decomposition when P is minimized at a triangle.
std::optional<Decomposition> tree5_rank2_decompose(const DissimilarityMatrix& m);

}  // namespace troprank
