#include "troprank/membership.hpp"

#include <algorithm>
#include <set>

namespace troprank {

Rational TropicalMonomial::evaluate(std::span<const Rational> point) const
{
    Rational total = coefficient;
    for (const auto& [pos, exp] : exponents) {
        if (pos < 0 || static_cast<std::size_t>(pos) >= point.size()) throw Error("monomial position outside the point");
        total += Rational(exp) * point[static_cast<std::size_t>(pos)];
    }
    return total;
}

PolynomialEvaluation evaluate(const TropicalPolynomial& p, std::span<const Rational> point)
{
    if (p.monomials.empty()) throw Error("empty tropical polynomial");
    PolynomialEvaluation out;
    for (int k = 0; k < static_cast<int>(p.monomials.size()); ++k) {
        const Rational value = p.monomials[static_cast<std::size_t>(k)].evaluate(point);
        if (out.minimizers.empty() || value < out.minimum) {
            out.minimum = value;
            out.minimizers.assign(1, k);
        } else if (value == out.minimum) {
            out.minimizers.push_back(k);
        }
    }
    return out;
}

std::string to_string(Basis b)
{
    switch (b) {
    case Basis::SymmetricMinors: return "symmetric-minors";
    case Basis::StarTree: return "star-tree";
    case Basis::Pluecker: return "pluecker";
    }
    return "?";
}

Basis parse_basis(std::string_view name)
{
    if (name == "symmetric-minors" || name == "minors" || name == "sym") return Basis::SymmetricMinors;
    if (name == "star-tree" || name == "star") return Basis::StarTree;
    if (name == "pluecker" || name == "plucker" || name == "tree") return Basis::Pluecker;
    throw Error("unknown basis '" + std::string(name) + "'");
}

namespace {

int sym_position(int n, int i, int j)
{
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
}

int diss_position(int n, int i, int j)
{
    if (i > j) std::swap(i, j);
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

// A quadratic monomial as a sorted pair of positions (equal positions = square).
using Term = std::pair<int, int>;

Term make_term(int a, int b) { return a <= b ? Term{a, b} : Term{b, a}; }

TropicalMonomial to_monomial(Term t)
{
    TropicalMonomial m;
    if (t.first == t.second) m.exponents = {{t.first, 2}};
    else m.exponents = {{t.first, 1}, {t.second, 1}};
    return m;
}

std::string term_label(Pair a, Pair b)
{
    if (a == b) return "x" + pair_label(a) + "^2";
    if (b < a) std::swap(a, b);
    return "x" + pair_label(a) + "*x" + pair_label(b);
}

}  // namespace

std::vector<TropicalPolynomial> tropical_basis(Basis basis, int n)
{
    std::vector<TropicalPolynomial> out;
    switch (basis) {
    case Basis::SymmetricMinors: {
        if (n < 1) throw Error("minors basis needs n >= 1");
        std::set<std::pair<Term, Term>> seen;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        if (i == k || j == l) continue;
                        Term t1 = make_term(sym_position(n, i, j), sym_position(n, k, l));
                        Term t2 = make_term(sym_position(n, i, l), sym_position(n, k, j));
                        if (t1 == t2) continue;
                        if (t2 < t1) std::swap(t1, t2);
                        if (!seen.insert({t1, t2}).second) continue;
                        TropicalPolynomial p;
                        p.monomials = {to_monomial(t1), to_monomial(t2)};
                        auto lab = [&](int a, int b, int c, int d) {
                            return term_label({std::min(a, b), std::max(a, b)}, {std::min(c, d), std::max(c, d)});
                        };
                        p.label = lab(i, j, k, l) + " + " + lab(i, l, k, j);
                        out.push_back(std::move(p));
                    }
        break;
    }
    case Basis::StarTree:
    case Basis::Pluecker: {
        if (n < 3) throw Error("dissimilarity bases need n >= 3");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    for (int l = k + 1; l < n; ++l) {
                        const std::array<Term, 3> terms = {make_term(diss_position(n, i, j), diss_position(n, k, l)),
                                                           make_term(diss_position(n, i, k), diss_position(n, j, l)),
                                                           make_term(diss_position(n, i, l), diss_position(n, j, k))};
                        const std::array<std::string, 3> labels = {term_label({i, j}, {k, l}), term_label({i, k}, {j, l}),
                                                                   term_label({i, l}, {j, k})};
                        if (basis == Basis::Pluecker) {
                            TropicalPolynomial p;
                            for (const auto& t : terms) p.monomials.push_back(to_monomial(t));
                            p.label = labels[0] + " + " + labels[1] + " + " + labels[2];
                            out.push_back(std::move(p));
                        } else {
                            for (int a = 0; a < 3; ++a)
                                for (int b = a + 1; b < 3; ++b) {
                                    TropicalPolynomial p;
                                    p.monomials = {to_monomial(terms[static_cast<std::size_t>(a)]), to_monomial(terms[static_cast<std::size_t>(b)])};
                                    p.label = labels[static_cast<std::size_t>(a)] + " + " + labels[static_cast<std::size_t>(b)];
                                    out.push_back(std::move(p));
                                }
                        }
                    }
        break;
    }
    }
    return out;
}

bool is_rank1_symmetric(const SymmetricMatrix& m)
{
    const int n = m.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (k == i) continue;
                for (int l = 0; l < n; ++l) {
                    if (l == j) continue;
                    if (m(i, j) + m(k, l) != m(i, l) + m(k, j)) return false;
                }
            }
    return true;
}

std::array<Rational, 3> quadruple_pairings(const DissimilarityMatrix& m, int i, int j, int k, int l)
{
    return {m(i, j) + m(k, l), m(i, k) + m(j, l), m(i, l) + m(j, k)};
}

bool is_star_tree(const DissimilarityMatrix& m)
{
    const int n = m.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const auto p = quadruple_pairings(m, i, j, k, l);
                    if (p[0] != p[1] || p[1] != p[2]) return false;
                }
    return true;
}

bool is_tree_matrix(const DissimilarityMatrix& m)
{
    const int n = m.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    auto p = quadruple_pairings(m, i, j, k, l);
                    std::sort(p.begin(), p.end());
                    if (p[0] != p[1]) return false;
                }
    return true;
}

bool is_tropically_singular_3x3(const SymmetricMatrix& m)
{
    if (m.size() != 3) throw Error("tropical 3x3 determinant needs n = 3");
    std::array<int, 3> perm{0, 1, 2};
    std::vector<Rational> terms;
    do {
        terms.push_back(m(0, perm[0]) + m(1, perm[1]) + m(2, perm[2]));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(terms.begin(), terms.end());
    return terms[0] == terms[1];
}

const std::vector<PerfectMatching>& perfect_matchings_6()
{
    static const std::vector<PerfectMatching> matchings = [] {
        std::vector<PerfectMatching> out;
        for (int a = 1; a < 6; ++a) {
            std::vector<int> rest;
            for (int v = 1; v < 6; ++v)
                if (v != a) rest.push_back(v);
            // rest has 4 elements; pair rest[0] with each of the other three.
            for (int b = 1; b < 4; ++b) {
                std::vector<int> last;
                for (int t = 1; t < 4; ++t)
                    if (t != b) last.push_back(rest[static_cast<std::size_t>(t)]);
                out.push_back({Pair{0, a}, Pair{rest[0], rest[static_cast<std::size_t>(b)]}, Pair{last[0], last[1]}});
            }
        }
        return out;
    }();
    return matchings;
}

std::vector<PerfectMatching> pfaffian_minimizers(const DissimilarityMatrix& m)
{
    if (m.size() != 6) throw Error("tropical Pfaffian needs n = 6");
    std::vector<PerfectMatching> best;
    Rational best_value;
    for (const auto& pm : perfect_matchings_6()) {
        const Rational value = m(pm[0].i, pm[0].j) + m(pm[1].i, pm[1].j) + m(pm[2].i, pm[2].j);
        if (best.empty() || value < best_value) {
            best_value = value;
            best.assign(1, pm);
        } else if (value == best_value) {
            best.push_back(pm);
        }
    }
    return best;
}

}  // namespace troprank
