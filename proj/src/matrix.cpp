#include "troprank/matrix.hpp"

#include "troprank/membership.hpp"

#include <algorithm>

namespace troprank {

std::string pair_label(Pair p)
{
    if (p.i < 9 && p.j < 9) return std::to_string(p.i + 1) + std::to_string(p.j + 1);
    return std::to_string(p.i + 1) + "," + std::to_string(p.j + 1);
}

// ---------------------------------------------------------------------------
// SymmetricMatrix

SymmetricMatrix::SymmetricMatrix(int n, Rational fill) : n_(n)
{
    if (n < 1) throw Error("symmetric matrix needs n >= 1");
    values_.assign(static_cast<std::size_t>(num_positions_for(n)), fill);
    positions_.reserve(values_.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) positions_.push_back({i, j});
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    const int n = static_cast<int>(rows.size());
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) throw Error("symmetric matrix rows must be square");
        for (int j = i; j < n; ++j) {
            const auto& a = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const auto& b = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (a != b) throw Error("matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            m.set(i, j, a);
        }
    }
    return m;
}

int SymmetricMatrix::index(int i, int j) const
{
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_) throw Error("symmetric matrix index out of range");
    return i * n_ - i * (i - 1) / 2 + (j - i);
}

SymmetricMatrix SymmetricMatrix::principal(std::span<const int> indices) const
{
    SymmetricMatrix out(static_cast<int>(indices.size()));
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a; b < indices.size(); ++b) out.set(static_cast<int>(a), static_cast<int>(b), (*this)(indices[a], indices[b]));
    return out;
}

SymmetricMatrix SymmetricMatrix::permuted(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != n_) throw Error("permutation size mismatch");
    return principal(perm);
}

Rational SymmetricMatrix::max_abs_entry() const
{
    Rational best = 0;
    for (const auto& v : values_) best = max(best, v.abs());
    return best;
}

// ---------------------------------------------------------------------------
// DissimilarityMatrix

DissimilarityMatrix::DissimilarityMatrix(int n, Rational fill) : n_(n)
{
    if (n < 3) throw Error("dissimilarity matrix needs n >= 3");
    values_.assign(static_cast<std::size_t>(num_positions_for(n)), fill);
    positions_.reserve(values_.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) positions_.push_back({i, j});
}

DissimilarityMatrix DissimilarityMatrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    const int n = static_cast<int>(rows.size());
    DissimilarityMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) throw Error("dissimilarity matrix rows must be square");
        for (int j = i + 1; j < n; ++j) {
            const auto& a = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const auto& b = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (a != b) throw Error("matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            m.set(i, j, a);
        }
    }
    return m;
}

int DissimilarityMatrix::index(int i, int j) const
{
    if (i > j) std::swap(i, j);
    if (i == j) throw Error("dissimilarity matrices have no diagonal");
    if (i < 0 || j >= n_) throw Error("dissimilarity matrix index out of range");
    return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

DissimilarityMatrix DissimilarityMatrix::principal(std::span<const int> indices) const
{
    DissimilarityMatrix out(static_cast<int>(indices.size()));
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b) out.set(static_cast<int>(a), static_cast<int>(b), (*this)(indices[a], indices[b]));
    return out;
}

DissimilarityMatrix DissimilarityMatrix::permuted(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != n_) throw Error("permutation size mismatch");
    return principal(perm);
}

Rational DissimilarityMatrix::max_abs_entry() const
{
    Rational best = 0;
    for (const auto& v : values_) best = max(best, v.abs());
    return best;
}

// ---------------------------------------------------------------------------
// Rank-1 constructors and extensions

SymmetricMatrix rank_one_symmetric(std::span<const Rational> v)
{
    const int n = static_cast<int>(v.size());
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, v[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(j)]);
    return m;
}

DissimilarityMatrix star_tree_matrix(std::span<const Rational> v)
{
    const int n = static_cast<int>(v.size());
    DissimilarityMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.set(i, j, v[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(j)]);
    return m;
}

DissimilarityMatrix project(const SymmetricMatrix& m)
{
    if (m.size() < 3) throw Error("project: need n >= 3");
    DissimilarityMatrix out(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j) out.set(i, j, m(i, j));
    return out;
}

RowVector rank_one_generator(const SymmetricMatrix& m)
{
    if (!is_rank1_symmetric(m)) throw Error("matrix is not symmetric rank 1");
    RowVector v(static_cast<std::size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i) v[static_cast<std::size_t>(i)] = m(i, i).half();
    return v;
}

RowVector star_tree_generator(const DissimilarityMatrix& m)
{
    if (!is_star_tree(m)) throw Error("matrix is not a star tree matrix");
    const int n = m.size();
    RowVector v(static_cast<std::size_t>(n));
    // v_i = (M_ij + M_ik - M_jk) / 2 for any j, k distinct from i.
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        const int k = (i + 2) % n;
        v[static_cast<std::size_t>(i)] = (m(i, j) + m(i, k) - m(j, k)).half();
    }
    return v;
}

RowVector pad_generator(std::span<const Rational> partial, std::span<const int> indices, int n, const Rational& c)
{
    if (partial.size() != indices.size() || partial.empty()) throw Error("pad_generator: bad partial generator");
    const Rational smallest = *std::min_element(partial.begin(), partial.end());
    const Rational pad = max(c.half(), c - smallest);
    RowVector w(static_cast<std::size_t>(n), pad);
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] < 0 || indices[k] >= n) throw Error("pad_generator: index out of range");
        w[static_cast<std::size_t>(indices[k])] = partial[k];
    }
    return w;
}

namespace {
std::vector<int> iota_indices(int m)
{
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) idx[static_cast<std::size_t>(k)] = k;
    return idx;
}
}  // namespace

SymmetricMatrix extend_rank_one(const SymmetricMatrix& m, int n, const Rational& c)
{
    if (n <= m.size()) throw Error("extend_rank_one: target dimension must exceed the block");
    const RowVector v = rank_one_generator(m);
    return rank_one_symmetric(pad_generator(v, iota_indices(m.size()), n, c));
}

DissimilarityMatrix extend_star_tree(const DissimilarityMatrix& m, int n, const Rational& c)
{
    if (n <= m.size()) throw Error("extend_star_tree: target dimension must exceed the block");
    const RowVector v = star_tree_generator(m);
    return star_tree_matrix(pad_generator(v, iota_indices(m.size()), n, c));
}

std::vector<std::vector<Rational>> to_rows(const SymmetricMatrix& m)
{
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m.size()), std::vector<Rational>(static_cast<std::size_t>(m.size())));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
    return rows;
}

std::vector<std::vector<std::optional<Rational>>> to_rows(const DissimilarityMatrix& m)
{
    std::vector<std::vector<std::optional<Rational>>> rows(static_cast<std::size_t>(m.size()),
                                                           std::vector<std::optional<Rational>>(static_cast<std::size_t>(m.size())));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            if (i != j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
    return rows;
}

}  // namespace troprank
