#include "troprank/small_cases.hpp"

#include "troprank/deficiency.hpp"
#include "troprank/rank_engine.hpp"

#include <algorithm>
#include <set>

namespace troprank {

namespace {

std::vector<int> inverse_perm(std::span<const int> perm)
{
    std::vector<int> inv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) inv[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
    return inv;
}

// v'(k) lives at index sigma[k].
RowVector unpermute(const RowVector& v, std::span<const int> sigma)
{
    RowVector out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[static_cast<std::size_t>(sigma[k])] = v[k];
    return out;
}

template <PackedMatrix M>
Decomposition retry_padding(const M& target, const std::function<Decomposition(const Rational&)>& build)
{
    Rational c = Rational(1) + target.max_abs_entry();
    for (int attempt = 0; attempt < 12; ++attempt, c = c * Rational(2)) {
        Decomposition d = build(c);
        if (verify(target, d).ok) return d;
    }
    throw Error("internal: small-case decomposition did not verify");
}

}  // namespace

Sym3Result sym3_rank(const SymmetricMatrix& m)
{
    if (m.size() != 3) throw Error("sym3_rank needs n = 3");
    Sym3Result out;
    if (auto w = infinite_rank_witness(m)) {
        out.rank = ExtendedInt::infinity();
        out.infinite_witness = w;
        return out;
    }
    if (is_rank1_symmetric(m)) {
        out.rank = ExtendedInt(1);
        out.decomposition = Decomposition{Notion::SymmetricBarvinok, {symmetric_summand(rank_one_generator(m))}, {}};
        return out;
    }
    if (!is_tropically_singular_3x3(m)) {
        out.rank = ExtendedInt(3);
        out.decomposition = symmetric_upper_decomposition(m);
        return out;
    }
    out.rank = ExtendedInt(2);
    const auto norm = normalize_diagonal(m);
    const SymmetricMatrix& z = norm.matrix;
    // Singularity with a zero diagonal forces a zero off-diagonal entry.
    int a = -1;
    int b = -1;
    for (int i = 0; i < 3 && a < 0; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (z(i, j).sign() == 0) {
                a = i;
                b = j;
                break;
            }
    if (a < 0) throw Error("internal: singular normalized 3x3 matrix without a zero entry");
    const int d = 3 - a - b;
    out.decomposition = retry_padding(m, [&](const Rational& c) {
        const Rational cn = c + z.max_abs_entry();
        const std::vector<Rational> part{Rational(0), Rational(0)};
        const std::vector<int> idx{a, b};
        RowVector g1 = pad_generator(part, idx, 3, cn);
        RowVector g2(3);
        g2[static_cast<std::size_t>(a)] = z(a, d);
        g2[static_cast<std::size_t>(b)] = z(b, d);
        g2[static_cast<std::size_t>(d)] = 0;
        Decomposition dec{Notion::SymmetricBarvinok, {}, {}};
        for (auto g : {g1, g2}) {
            for (std::size_t i = 0; i < 3; ++i) g[i] += norm.offsets[i];
            dec.summands.push_back(symmetric_summand(std::move(g)));
        }
        return dec;
    });
    return out;
}

const std::vector<FiveCycle>& five_cycles()
{
    static const std::vector<FiveCycle> cycles = [] {
        std::vector<FiveCycle> out;
        std::array<int, 4> rest{1, 2, 3, 4};
        do {
            if (rest[0] < rest[3]) out.push_back({0, rest[0], rest[1], rest[2], rest[3]});
        } while (std::next_permutation(rest.begin(), rest.end()));
        return out;
    }();
    return cycles;
}

namespace {

Rational cycle_value(const DissimilarityMatrix& m, const FiveCycle& c)
{
    Rational v = 0;
    for (std::size_t k = 0; k < 5; ++k) v += m(c[k], c[(k + 1) % 5]);
    return v;
}

std::set<std::pair<int, int>> cycle_edges(const FiveCycle& c)
{
    std::set<std::pair<int, int>> out;
    for (std::size_t k = 0; k < 5; ++k) out.insert(std::minmax(c[k], c[(k + 1) % 5]));
    return out;
}

int cycle_index(const FiveCycle& c)
{
    const auto edges = cycle_edges(c);
    const auto& all = five_cycles();
    for (std::size_t k = 0; k < all.size(); ++k)
        if (cycle_edges(all[k]) == edges) return static_cast<int>(k);
    throw Error("internal: unknown five-cycle");
}

// Canonical labels: A = 1-2-3-4-5, B = 1-3-2-4-5 (0-based below).
constexpr FiveCycle kPentadA{0, 1, 2, 3, 4};
constexpr FiveCycle kPentadB{0, 2, 1, 3, 4};

template <typename Values>
std::vector<int> argmin(const Values& values)
{
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(values.size()); ++k) {
        if (out.empty() || values[static_cast<std::size_t>(k)] < values[static_cast<std::size_t>(out.front())]) out.assign(1, k);
        else if (values[static_cast<std::size_t>(k)] == values[static_cast<std::size_t>(out.front())]) out.push_back(k);
    }
    return out;
}

void require5(const DissimilarityMatrix& m)
{
    if (m.size() != 5) throw Error("this classifier needs n = 5");
}

}  // namespace

PentadEvaluation evaluate_pentad(const DissimilarityMatrix& m)
{
    require5(m);
    PentadEvaluation ev;
    for (const auto& c : five_cycles()) ev.values.push_back(cycle_value(m, c));
    ev.minimizers = argmin(ev.values);
    return ev;
}

Star5Test star5_rank2_test(const DissimilarityMatrix& m)
{
    require5(m);
    Star5Test out;
    if (is_star_tree(m)) {
        out.rank_one = true;
        out.rank_at_most_two = true;
        return out;
    }
    const auto ev = evaluate_pentad(m);
    const Rational best = ev.values[static_cast<std::size_t>(ev.minimizers.front())];
    std::array<int, 5> sigma{0, 1, 2, 3, 4};
    do {
        const DissimilarityMatrix p = m.permuted(sigma);
        if (cycle_value(p, kPentadA) != best || cycle_value(p, kPentadB) != best) continue;
        const Rational a = p(0, 1) + p(2, 3);
        if (a != p(0, 2) + p(1, 3) || p(0, 3) + p(1, 2) > a) continue;
        FiveCycle ca{};
        FiveCycle cb{};
        for (std::size_t k = 0; k < 5; ++k) {
            ca[k] = sigma[static_cast<std::size_t>(kPentadA[k])];
            cb[k] = sigma[static_cast<std::size_t>(kPentadB[k])];
        }
        out.rank_at_most_two = true;
        out.witness = Star5Witness{cycle_index(ca), cycle_index(cb), sigma};
        return out;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

Decomposition star5_rank2_decompose(const DissimilarityMatrix& m)
{
    const auto test = star5_rank2_test(m);
    if (!test.rank_at_most_two) throw Error("matrix fails the star tree rank 2 test");
    if (test.rank_one) return Decomposition{Notion::StarTree, {star_summand(star_tree_generator(m))}, {}};
    const auto& sigma = test.witness->relabeling;
    const DissimilarityMatrix p = m.permuted(sigma);
    const Rational a = p(0, 1) + p(2, 3);

    DissimilarityMatrix first(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) first.set(i, j, p(i, j));
    first.set(0, 3, a - p(1, 2));
    const RowVector g1 = star_tree_generator(first);

    RowVector g2(5);
    g2[3] = (p(3, 4) + p(0, 3) - p(0, 4)).half();
    g2[4] = (p(3, 4) - p(0, 3) + p(0, 4)).half();
    for (int i = 0; i < 3; ++i) g2[static_cast<std::size_t>(i)] = p(i, 4) - g2[4];

    return retry_padding(m, [&](const Rational& c) {
        const std::vector<int> lead{0, 1, 2, 3};
        Decomposition d{Notion::StarTree, {}, {}};
        d.summands.push_back(star_summand(unpermute(pad_generator(g1, lead, 5, c), sigma)));
        d.summands.push_back(star_summand(unpermute(g2, sigma)));
        return d;
    });
}

int star5_rank(const DissimilarityMatrix& m)
{
    const auto t = star5_rank2_test(m);
    return t.rank_one ? 1 : (t.rank_at_most_two ? 2 : 3);
}

const std::vector<PTerm>& p_terms()
{
    static const std::vector<PTerm> terms = [] {
        std::vector<PTerm> out;
        for (const auto& c : five_cycles()) {
            PTerm t;
            t.kind = PTermKind::Pentagon;
            t.cycle = c;
            out.push_back(t);
        }
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                for (int k = j + 1; k < 5; ++k) {
                    PTerm t;
                    t.kind = PTermKind::Triangle;
                    t.triangle = {i, j, k};
                    int f = 0;
                    for (int x = 0; x < 5; ++x)
                        if (x != i && x != j && x != k) t.pair[static_cast<std::size_t>(f++)] = x;
                    out.push_back(t);
                }
        return out;
    }();
    return terms;
}

bool PEvaluation::triangle_minimizer() const
{
    const auto& terms = p_terms();
    return std::any_of(minimizers.begin(), minimizers.end(),
                       [&](int k) { return terms[static_cast<std::size_t>(k)].kind == PTermKind::Triangle; });
}

PEvaluation evaluate_p(const DissimilarityMatrix& m)
{
    require5(m);
    PEvaluation ev;
    for (const auto& t : p_terms()) {
        if (t.kind == PTermKind::Pentagon) {
            ev.values.push_back(cycle_value(m, t.cycle));
        } else {
            const auto& [i, j, k] = t.triangle;
            ev.values.push_back(m(i, j) + m(j, k) + m(i, k) + Rational(2) * m(t.pair[0], t.pair[1]));
        }
    }
    ev.minimizers = argmin(ev.values);
    return ev;
}

std::optional<Decomposition> tree5_rank2_decompose(const DissimilarityMatrix& m)
{
    require5(m);
    if (is_tree_matrix(m)) return Decomposition{Notion::Tree, {tree_summand(m)}, {}};
    const auto ev = evaluate_p(m);
    const auto& terms = p_terms();
    const PTerm* tri = nullptr;
    for (int k : ev.minimizers)
        if (terms[static_cast<std::size_t>(k)].kind == PTermKind::Triangle) {
            tri = &terms[static_cast<std::size_t>(k)];
            break;
        }
    if (tri == nullptr) return std::nullopt;

    // Orient: pair -> labels {1,2}, triangle -> {3,4,5}, satisfying the three inequalities.
    std::array<int, 2> pr = tri->pair;
    std::array<int, 3> tr = tri->triangle;
    std::optional<std::vector<int>> sigma;
    for (int s = 0; s < 2 && !sigma; ++s, std::swap(pr[0], pr[1])) {
        std::sort(tr.begin(), tr.end());
        do {
            const std::vector<int> cand{pr[0], pr[1], tr[0], tr[1], tr[2]};
            const DissimilarityMatrix p = m.permuted(cand);
            if (p(0, 3) + p(1, 2) >= p(0, 2) + p(1, 3) && p(0, 4) + p(1, 3) <= p(0, 3) + p(1, 4) &&
                p(0, 2) + p(1, 4) <= p(0, 4) + p(1, 2)) {
                sigma = cand;
                break;
            }
        } while (std::next_permutation(tr.begin(), tr.end()));
    }
    if (!sigma) throw Error("internal: no orientation satisfies the triangle-complement inequalities");
    const DissimilarityMatrix p = m.permuted(*sigma);
    const auto inv = inverse_perm(*sigma);

    DissimilarityMatrix t = p;
    t.set(2, 3, p(1, 3) + p(0, 2) - p(0, 1));
    t.set(2, 4, p(1, 4) + p(0, 2) - p(0, 1));
    t.set(3, 4, p(0, 4) + p(1, 3) - p(0, 1));
    if (!is_tree_matrix(t) || !dominates(t, p)) throw Error("internal: triangle-complement tree is invalid");

    const std::vector<int> tri_idx{2, 3, 4};
    const DissimilarityMatrix block = p.principal(tri_idx);
    return retry_padding(m, [&](const Rational& c) {
        Decomposition d{Notion::Tree, {}, {}};
        d.summands.push_back(tree_summand(t.permuted(inv)));
        d.summands.push_back(tree_summand(embed_tree(realize_tree(block), tri_idx, 5, c).distances().permuted(inv)));
        return d;
    });
}

Tree5Result tree5_rank(const DissimilarityMatrix& m)
{
    require5(m);
    Tree5Result out;
    if (is_tree_matrix(m)) {
        out.rank = 1;
        out.decomposition = Decomposition{Notion::Tree, {tree_summand(m)}, {}};
        return out;
    }
    if (auto d = tree5_rank2_decompose(m)) {
        out.rank = 2;
        out.decomposition = std::move(d);
        return out;
    }
    out.rank = 3;
    const auto cls = classify_petersen(m);
    if (cls.kind != PetersenClass::FiveCycle) throw Error("internal: tree rank 3 without a five-cycle deficiency graph");
    Graph g(10);
    for (const auto& [a, b] : cls.edges) g.add_edge(a, b);
    std::vector<int> cycle{cls.edges.front().first};
    int prev = -1;
    while (static_cast<int>(cycle.size()) < 5) {
        const int cur = cycle.back();
        for (int w : g.neighbors(cur))
            if (w != prev && w != cycle.front()) {
                prev = cur;
                cycle.push_back(w);
                break;
            }
    }
    out.deficiency_cycle = cycle;
    return out;
}

}  // namespace troprank
