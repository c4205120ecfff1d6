#pragma once

#include "troprank/matrix.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace troprank {

/// coefficient + sum exponent * x[position].
struct TropicalMonomial {
    Rational coefficient = 0;
    std::vector<std::pair<int, int>> exponents;  // (position, exponent), sorted by position

    [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;
    friend bool operator==(const TropicalMonomial&, const TropicalMonomial&) = default;
};

struct TropicalPolynomial {
    std::vector<TropicalMonomial> monomials;
    std::string label;
};

struct PolynomialEvaluation {
    Rational minimum;
    std::vector<int> minimizers;  // indices into the polynomial's monomials
    [[nodiscard]] bool vanishes() const { return minimizers.size() >= 2; }
};

/// Evaluates every monomial; the point lies on the hypersurface iff the minimum is attained twice.
PolynomialEvaluation evaluate(const TropicalPolynomial& p, std::span<const Rational> point);
inline bool vanishes_at(const TropicalPolynomial& p, std::span<const Rational> point) { return evaluate(p, point).vanishes(); }

/// The three quadratic tropical bases shipped with the library.
enum class Basis { SymmetricMinors, StarTree, Pluecker };

std::string to_string(Basis b);
Basis parse_basis(std::string_view name);

/// Polynomials of `basis` on n x n matrices, with positions numbered as in
/// SymmetricMatrix (minors) or DissimilarityMatrix (star tree, Pluecker).
/// Duplicate and identically-vanishing polynomials are dropped.
std::vector<TropicalPolynomial> tropical_basis(Basis basis, int n);

bool is_rank1_symmetric(const SymmetricMatrix& m);
bool is_star_tree(const DissimilarityMatrix& m);
/// Tropical four-point condition on every quadruple; vacuous for n = 3.
bool is_tree_matrix(const DissimilarityMatrix& m);

/// Values of the three pairings {ij|kl, ik|jl, il|jk} of a quadruple i < j < k < l.
std::array<Rational, 3> quadruple_pairings(const DissimilarityMatrix& m, int i, int j, int k, int l);

/// Minimum of the six permutation terms attained at least twice.
bool is_tropically_singular_3x3(const SymmetricMatrix& m);

using PerfectMatching = std::array<Pair, 3>;
/// All 15 perfect matchings of {0..5} in lexicographic order.
const std::vector<PerfectMatching>& perfect_matchings_6();
/// Matchings attaining the minimum of the tropical Pfaffian of a 6 x 6 matrix.
std::vector<PerfectMatching> pfaffian_minimizers(const DissimilarityMatrix& m);

}  // namespace troprank
