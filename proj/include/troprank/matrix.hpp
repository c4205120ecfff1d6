#pragma once

#include "troprank/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace troprank {

/// Raised for violated preconditions (wrong dimension, wrong space, input not on a variety).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unordered index pair {i, j} with i <= j (0-based).
struct Pair {
    int i = 0;
    int j = 0;
    friend constexpr bool operator==(const Pair&, const Pair&) = default;
    friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

/// 1-based "ij" label, e.g. {0, 1} -> "12"; indices above 9 are comma separated.
std::string pair_label(Pair p);

/// Positive integer or infinity. Used for ranks and chromatic numbers.
class ExtendedInt {
public:
    constexpr explicit ExtendedInt(int value) : value_(value) {}
    static constexpr ExtendedInt infinity() { return ExtendedInt(); }

    [[nodiscard]] constexpr bool is_infinite() const { return !value_.has_value(); }
    [[nodiscard]] constexpr bool is_finite() const { return value_.has_value(); }
    [[nodiscard]] int value() const
    {
        if (!value_) throw Error("value of an infinite count");
        return *value_;
    }
    [[nodiscard]] std::string to_string() const { return value_ ? std::to_string(*value_) : "infinity"; }

    friend constexpr bool operator==(const ExtendedInt&, const ExtendedInt&) = default;
    friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b)
    {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
        return *a.value_ <=> *b.value_;
    }

private:
    constexpr ExtendedInt() = default;
    std::optional<int> value_;
};

using RowVector = std::vector<Rational>;

/// n x n symmetric matrix storing one value per unordered pair {i, j}, i <= j.
///
/// Positions are numbered row by row over the upper triangle including the
/// diagonal: (0,0), (0,1), ..., (0,n-1), (1,1), ...
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int n, Rational fill = 0);
    /// Builds from full rows; throws unless square and symmetric.
    static SymmetricMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] int num_positions() const { return static_cast<int>(values_.size()); }
    [[nodiscard]] static int num_positions_for(int n) { return n * (n + 1) / 2; }

    [[nodiscard]] const Rational& operator()(int i, int j) const { return values_[index(i, j)]; }
    void set(int i, int j, Rational value) { values_[index(i, j)] = value; }

    [[nodiscard]] int position_index(int i, int j) const { return index(i, j); }
    [[nodiscard]] Pair position(int k) const { return positions_[static_cast<std::size_t>(k)]; }
    [[nodiscard]] std::span<const Rational> entries() const { return values_; }

    [[nodiscard]] SymmetricMatrix principal(std::span<const int> indices) const;
    /// result(a, b) = this(perm[a], perm[b]).
    [[nodiscard]] SymmetricMatrix permuted(std::span<const int> perm) const;
    [[nodiscard]] Rational max_abs_entry() const;

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    [[nodiscard]] int index(int i, int j) const;

    int n_ = 0;
    std::vector<Rational> values_;
    std::vector<Pair> positions_;
};

/// n x n dissimilarity matrix (n >= 3): one value per pair {i, j}, i < j, no diagonal.
///
/// Positions are numbered (0,1), (0,2), ..., (0,n-1), (1,2), ...
class DissimilarityMatrix {
public:
    DissimilarityMatrix() = default;
    explicit DissimilarityMatrix(int n, Rational fill = 0);
    /// Builds from full rows; diagonal cells are ignored, off-diagonal must be symmetric.
    static DissimilarityMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] int num_positions() const { return static_cast<int>(values_.size()); }
    [[nodiscard]] static int num_positions_for(int n) { return n * (n - 1) / 2; }

    [[nodiscard]] const Rational& operator()(int i, int j) const { return values_[index(i, j)]; }
    void set(int i, int j, Rational value) { values_[index(i, j)] = value; }

    [[nodiscard]] int position_index(int i, int j) const { return index(i, j); }
    [[nodiscard]] Pair position(int k) const { return positions_[static_cast<std::size_t>(k)]; }
    [[nodiscard]] std::span<const Rational> entries() const { return values_; }

    [[nodiscard]] DissimilarityMatrix principal(std::span<const int> indices) const;
    [[nodiscard]] DissimilarityMatrix permuted(std::span<const int> perm) const;
    [[nodiscard]] Rational max_abs_entry() const;

    friend bool operator==(const DissimilarityMatrix&, const DissimilarityMatrix&) = default;

private:
    [[nodiscard]] int index(int i, int j) const;

    int n_ = 0;
    std::vector<Rational> values_;
    std::vector<Pair> positions_;
};

using AnyMatrix = std::variant<SymmetricMatrix, DissimilarityMatrix>;

template <typename M>
concept PackedMatrix = std::same_as<M, SymmetricMatrix> || std::same_as<M, DissimilarityMatrix>;

/// Entrywise minimum. Throws Error on dimension mismatch.
template <PackedMatrix M>
M trop_sum(const M& a, const M& b)
{
    if (a.size() != b.size()) throw Error("trop_sum: dimension mismatch");
    M out = a;
    for (int k = 0; k < a.num_positions(); ++k) {
        const Pair p = a.position(k);
        if (b(p.i, p.j) < a(p.i, p.j)) out.set(p.i, p.j, b(p.i, p.j));
    }
    return out;
}

/// Tropical sum of a nonempty list.
template <PackedMatrix M>
M trop_sum(std::span<const M> terms)
{
    if (terms.empty()) throw Error("trop_sum of an empty list");
    M out = terms.front();
    for (std::size_t k = 1; k < terms.size(); ++k) out = trop_sum(out, terms[k]);
    return out;
}

/// True when a(p) >= b(p) at every position.
template <PackedMatrix M>
bool dominates(const M& a, const M& b)
{
    if (a.size() != b.size()) throw Error("dominates: dimension mismatch");
    for (int k = 0; k < a.num_positions(); ++k)
        if (a.entries()[static_cast<std::size_t>(k)] < b.entries()[static_cast<std::size_t>(k)]) return false;
    return true;
}

/// v^T (.) v: entry {i, j} is v_i + v_j.
SymmetricMatrix rank_one_symmetric(std::span<const Rational> v);
/// pi(v^T (.) v).
DissimilarityMatrix star_tree_matrix(std::span<const Rational> v);

/// Drops the diagonal. Requires n >= 3.
DissimilarityMatrix project(const SymmetricMatrix& m);

/// Generator of a rank-1 symmetric matrix (v_i = M_ii / 2); throws if M is not rank 1.
RowVector rank_one_generator(const SymmetricMatrix& m);
/// Generator of a star tree matrix; throws if M is not a star tree matrix.
RowVector star_tree_generator(const DissimilarityMatrix& m);

/// Pads a generator known on `indices` to length n so every entry touching a
/// padded coordinate is >= c. Padded coordinates get max{c/2, c - min_k v_k}.
RowVector pad_generator(std::span<const Rational> partial, std::span<const int> indices, int n, const Rational& c);

/// Rank-1 matrix on n indices whose leading block is M and whose other entries are >= c.
SymmetricMatrix extend_rank_one(const SymmetricMatrix& m, int n, const Rational& c);
/// Star tree matrix on n indices whose leading block is M and whose other entries are >= c.
DissimilarityMatrix extend_star_tree(const DissimilarityMatrix& m, int n, const Rational& c);

std::vector<std::vector<Rational>> to_rows(const SymmetricMatrix& m);
/// Diagonal cells are std::nullopt.
std::vector<std::vector<std::optional<Rational>>> to_rows(const DissimilarityMatrix& m);

}  // namespace troprank
