#include "troprank/rank_engine.hpp"

#include "troprank/linear.hpp"
#include "troprank/small_cases.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace troprank {

std::optional<Pair> infinite_rank_witness(const SymmetricMatrix& m)
{
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            if (m(i, j) + m(i, j) < m(i, i) + m(j, j)) return Pair{i, j};
    return std::nullopt;
}

NormalizedDiagonal normalize_diagonal(const SymmetricMatrix& m)
{
    NormalizedDiagonal out{SymmetricMatrix(m.size()), RowVector(static_cast<std::size_t>(m.size()))};
    for (int i = 0; i < m.size(); ++i) out.offsets[static_cast<std::size_t>(i)] = m(i, i).half();
    for (int i = 0; i < m.size(); ++i)
        for (int j = i; j < m.size(); ++j)
            out.matrix.set(i, j, m(i, j) - out.offsets[static_cast<std::size_t>(i)] - out.offsets[static_cast<std::size_t>(j)]);
    return out;
}

int upper_bound_size(Notion notion, int n)
{
    switch (notion) {
    case Notion::SymmetricBarvinok: return std::max(n, n * n / 4);
    case Notion::StarTree: return std::max(1, n - 2);
    case Notion::Tree: return n <= 3 ? 1 : (n <= 5 ? n - 2 : n - 3);
    }
    return n;
}

namespace {

// Runs a construction with padding constant C, doubling C until the result verifies.
template <PackedMatrix M>
Decomposition with_padding(const M& target, const std::function<Decomposition(const Rational&)>& build)
{
    Rational c = Rational(1) + target.max_abs_entry();
    std::vector<std::string> notes;
    for (int attempt = 0; attempt < 12; ++attempt) {
        Decomposition d = build(c);
        const auto rep = verify(target, d);
        if (rep.ok) {
            d.notes.insert(d.notes.begin(), notes.begin(), notes.end());
            return d;
        }
        notes.push_back("padding constant " + c.to_string() + " failed (" + rep.message + "); doubled");
        c = c * Rational(2);
    }
    throw Error("construction did not verify after repeated padding increases");
}

std::vector<int> range_indices(int lo, int hi)
{
    std::vector<int> out;
    for (int k = lo; k < hi; ++k) out.push_back(k);
    return out;
}

struct SymGenerators {
    std::vector<RowVector> gens;
    std::optional<int> exceptional;  // diagonal index that may be too large
};

RowVector pad_on(std::initializer_list<std::pair<int, Rational>> values, int n, const Rational& c)
{
    std::vector<Rational> partial;
    std::vector<int> idx;
    for (const auto& [i, v] : values) {
        idx.push_back(i);
        partial.push_back(v);
    }
    return pad_generator(partial, idx, n, c);
}

// m has zero diagonal and nonnegative off-diagonal entries.
SymGenerators sym_generators(const SymmetricMatrix& m, bool relaxed, const Rational& c)
{
    const int n = m.size();
    SymGenerators out;
    if (n == 1) {
        out.gens.push_back({Rational(0)});
        return out;
    }
    if (n == 2) {
        out.gens.push_back({Rational(0), m(0, 1)});
        if (relaxed) out.exceptional = 1;
        else out.gens.push_back({m(0, 1), Rational(0)});
        return out;
    }
    if (n == 3) {
        std::array<int, 3> perm{0, 1, 2};
        while (m(perm[0], perm[1]) < m(perm[1], perm[2])) std::next_permutation(perm.begin(), perm.end());
        const int a = perm[0];
        const int b = perm[1];
        const int d = perm[2];
        out.gens.push_back(pad_on({{a, Rational(0)}, {b, m(a, b)}, {d, m(a, d)}}, 3, c));
        out.gens.push_back(pad_on({{b, Rational(0)}, {d, m(b, d)}}, 3, c));
        if (relaxed) out.exceptional = d;
        else out.gens.push_back(pad_on({{d, Rational(0)}}, 3, c));
        return out;
    }
    // Relabel so that M_{p0 p1} is the least off-diagonal entry.
    int p0 = 0;
    int p1 = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m(i, j) < m(p0, p1)) {
                p0 = i;
                p1 = j;
            }
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (i != p0 && i != p1) rest.push_back(i);
    const auto sub = sym_generators(m.principal(rest), true, c);
    for (const auto& g : sub.gens) out.gens.push_back(pad_generator(g, rest, n, c));
    const int exc = sub.exceptional ? rest[static_cast<std::size_t>(*sub.exceptional)] : -1;
    const int t = rest[0] != exc ? rest[0] : rest[1];
    for (int i : rest)
        if (i != t) out.gens.push_back(pad_on({{p0, m(p0, i)}, {p1, m(p1, i)}, {i, Rational(0)}}, n, c));
    if (m(p0, t) < m(p1, t)) std::swap(p0, p1);
    out.gens.push_back(pad_on({{p0, Rational(0)}, {p1, m(p0, p1)}, {t, m(p0, t)}}, n, c));
    out.gens.push_back(pad_on({{p1, Rational(0)}, {t, m(p1, t)}}, n, c));
    return out;
}

}  // namespace

Decomposition symmetric_upper_decomposition(const SymmetricMatrix& m)
{
    if (auto w = infinite_rank_witness(m)) throw Error("symmetric Barvinok rank is infinite: 2 M_" + pair_label(*w) + " < M_ii + M_jj");
    if (m.size() < 1) throw Error("empty matrix");
    const auto norm = normalize_diagonal(m);
    return with_padding(m, [&](const Rational& c) {
        Decomposition d{Notion::SymmetricBarvinok, {}, {}};
        const Rational cn = c + norm.matrix.max_abs_entry();
        for (auto g : sym_generators(norm.matrix, false, cn).gens) {
            for (std::size_t i = 0; i < g.size(); ++i) g[i] += norm.offsets[i];
            d.summands.push_back(symmetric_summand(std::move(g)));
        }
        return d;
    });
}

namespace {

std::vector<RowVector> star_generators(const DissimilarityMatrix& m, const Rational& c)
{
    const int n = m.size();
    if (n == 3) return {star_tree_generator(m)};
    const auto lead = range_indices(0, n - 1);
    std::vector<RowVector> out;
    for (const auto& g : star_generators(m.principal(lead), c)) out.push_back(pad_generator(g, lead, n, c));
    RowVector w(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) w[static_cast<std::size_t>(i)] = m(i, n - 1) + c;
    w[static_cast<std::size_t>(n - 1)] = -c;
    out.push_back(std::move(w));
    return out;
}

}  // namespace

Decomposition star_upper_decomposition(const DissimilarityMatrix& m)
{
    if (m.size() < 3) throw Error("star tree decompositions need n >= 3");
    if (is_star_tree(m)) return Decomposition{Notion::StarTree, {star_summand(star_tree_generator(m))}, {}};
    return with_padding(m, [&](const Rational& c) {
        Decomposition d{Notion::StarTree, {}, {}};
        for (auto& g : star_generators(m, c)) d.summands.push_back(star_summand(std::move(g)));
        return d;
    });
}

namespace {

std::vector<int> inverse(std::span<const int> perm)
{
    std::vector<int> inv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) inv[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
    return inv;
}

// Tree on n leaves agreeing with the 4 x 4 matrix `block` on `idx`, entries >= c elsewhere.
DissimilarityMatrix padded_tree(const DissimilarityMatrix& block, const std::vector<int>& idx, int n, const Rational& c)
{
    return embed_tree(realize_tree(block), idx, n, c).distances();
}

std::vector<DissimilarityMatrix> pfaffian_trees(const DissimilarityMatrix& m, const Rational& c)
{
    const PerfectMatching pm = pfaffian_minimizers(m).front();
    const std::vector<int> perm{pm[0].i, pm[0].j, pm[1].i, pm[1].j, pm[2].i, pm[2].j};
    const DissimilarityMatrix a = m.permuted(perm);
    const auto inv = inverse(perm);

    auto block = [&](std::array<int, 4> q, int ci, int cj, const Rational& value) {
        DissimilarityMatrix b(4);
        for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y) b.set(x, y, a(q[static_cast<std::size_t>(x)], q[static_cast<std::size_t>(y)]));
        b.set(ci, cj, value);
        return padded_tree(b, {q.begin(), q.end()}, 6, c).permuted(inv);
    };
    const Rational x1 = min(a(0, 2) + a(1, 3) - a(0, 1), a(0, 3) + a(1, 2) - a(0, 1));
    const Rational x2 = min(a(0, 4) + a(1, 5) - a(4, 5), a(0, 5) + a(1, 4) - a(4, 5));
    const Rational x3 = min(a(2, 4) + a(3, 5) - a(2, 3), a(2, 5) + a(3, 4) - a(2, 3));
    return {block({0, 1, 2, 3}, 2, 3, x1), block({0, 1, 4, 5}, 0, 1, x2), block({2, 3, 4, 5}, 2, 3, x3)};
}

}  // namespace

Decomposition tree_upper_decomposition(const DissimilarityMatrix& m)
{
    const int n = m.size();
    if (n < 3) throw Error("tree decompositions need n >= 3");
    if (is_tree_matrix(m)) return Decomposition{Notion::Tree, {tree_summand(m)}, {}};
    if (n == 4) return as_tree_decomposition(star_upper_decomposition(m));
    if (n == 5) {
        if (auto d = tree5_rank2_decompose(m)) return *d;
        return as_tree_decomposition(star_upper_decomposition(m));
    }
    if (n == 6) {
        return with_padding(m, [&](const Rational& c) {
            Decomposition d{Notion::Tree, {}, {}};
            for (const auto& t : pfaffian_trees(m, c)) d.summands.push_back(tree_summand(t));
            return d;
        });
    }
    const auto lead = range_indices(0, 6);
    const Decomposition head = tree_upper_decomposition(m.principal(lead));
    return with_padding(m, [&](const Rational& c) {
        Decomposition d{Notion::Tree, {}, {}};
        for (const auto& s : head.summands) d.summands.push_back(tree_summand(embed_tree(*s.tree, lead, n, c)));
        for (int i = 6; i < n; ++i) {
            RowVector v(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = j == i ? -c : c + m(i, j);
            d.summands.push_back(star_summand(std::move(v)));
        }
        return d;
    });
}

Decomposition upper_decomposition(const AnyMatrix& m, Notion notion)
{
    if (notion == Notion::SymmetricBarvinok) {
        const auto* s = std::get_if<SymmetricMatrix>(&m);
        if (s == nullptr) throw Error("symmetric Barvinok rank needs a symmetric matrix");
        return symmetric_upper_decomposition(*s);
    }
    const auto* d = std::get_if<DissimilarityMatrix>(&m);
    if (d == nullptr) throw Error(to_string(notion) + " rank needs a dissimilarity matrix");
    return notion == Notion::StarTree ? star_upper_decomposition(*d) : tree_upper_decomposition(*d);
}

// ---------------------------------------------------------------------------
// Class feasibility.

namespace {

struct SumConstraint {
    int i;
    int j;  // i == j: 2 x_i
    Rational value;
    bool equal;
};

// x_i + x_j (= or >=) value. Octagon graph: node 2i is +x_i, 2i+1 is -x_i.
// A shortest-path potential d gives x_i = (d(+i) - d(-i)) / 2.
std::optional<RowVector> utvpi_solve(int n, const std::vector<SumConstraint>& cs)
{
    struct Arc {
        int from;
        int to;
        Rational w;
    };
    std::vector<Arc> arcs;
    auto plus = [](int i) { return 2 * i; };
    auto minus = [](int i) { return 2 * i + 1; };
    for (const auto& c : cs) {
        if (c.equal) {  // x_i + x_j <= v
            arcs.push_back({minus(c.j), plus(c.i), c.value});
            if (c.i != c.j) arcs.push_back({minus(c.i), plus(c.j), c.value});
        }
        // -x_i - x_j <= -v
        arcs.push_back({plus(c.j), minus(c.i), -c.value});
        if (c.i != c.j) arcs.push_back({plus(c.i), minus(c.j), -c.value});
    }
    const int nodes = 2 * n;
    std::vector<Rational> d(static_cast<std::size_t>(nodes), Rational(0));
    for (int round = 0; round <= nodes; ++round) {
        bool changed = false;
        for (const auto& a : arcs) {
            const Rational cand = d[static_cast<std::size_t>(a.from)] + a.w;
            if (cand < d[static_cast<std::size_t>(a.to)]) {
                d[static_cast<std::size_t>(a.to)] = cand;
                changed = true;
            }
        }
        if (!changed) {
            RowVector x(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (d[static_cast<std::size_t>(plus(i))] - d[static_cast<std::size_t>(minus(i))]).half();
            return x;
        }
    }
    return std::nullopt;  // negative cycle
}

std::vector<char> class_flags(int positions, std::span<const int> cls)
{
    std::vector<char> in(static_cast<std::size_t>(positions), 0);
    for (int p : cls) {
        if (p < 0 || p >= positions) throw Error("class position out of range");
        in[static_cast<std::size_t>(p)] = 1;
    }
    return in;
}

template <PackedMatrix M>
std::optional<RowVector> sum_witness(const M& m, std::span<const int> cls)
{
    const auto in = class_flags(m.num_positions(), cls);
    std::vector<SumConstraint> cs;
    for (int p = 0; p < m.num_positions(); ++p) {
        const Pair q = m.position(p);
        cs.push_back({q.i, q.j, m(q.i, q.j), in[static_cast<std::size_t>(p)] != 0});
    }
    return utvpi_solve(m.size(), cs);
}

struct Topology {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> paths;  // per dissimilarity position: edge indices on the leaf-leaf path
    std::vector<int> quartet_split;  // per quadruple i<j<k<l: 0 = ij|kl, 1 = ik|jl, 2 = il|jk
};

std::vector<std::array<int, 4>> quadruples(int n)
{
    std::vector<std::array<int, 4>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) out.push_back({i, j, k, l});
    return out;
}

const std::vector<Topology>& topologies(int n)
{
    static std::mutex mutex;
    static std::map<int, std::vector<Topology>> cache;
    const std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<Topology> out;
    const DissimilarityMatrix layout(n);
    const auto quads = quadruples(n);
    for (const auto& edges : binary_topologies(n)) {
        Topology t{edges, {}, {}};
        const int vertices = 2 * n - 2;
        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(vertices));
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            adj[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].first)].emplace_back(edges[static_cast<std::size_t>(e)].second, e);
            adj[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].second)].emplace_back(edges[static_cast<std::size_t>(e)].first, e);
        }
        std::vector<std::vector<std::vector<int>>> leaf_paths(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) {
            std::vector<int> parent_edge(static_cast<std::size_t>(vertices), -1);
            std::vector<int> parent(static_cast<std::size_t>(vertices), -1);
            std::vector<int> stack{s};
            parent[static_cast<std::size_t>(s)] = s;
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (const auto& [w, e] : adj[static_cast<std::size_t>(u)])
                    if (parent[static_cast<std::size_t>(w)] < 0) {
                        parent[static_cast<std::size_t>(w)] = u;
                        parent_edge[static_cast<std::size_t>(w)] = e;
                        stack.push_back(w);
                    }
            }
            leaf_paths[static_cast<std::size_t>(s)].resize(static_cast<std::size_t>(n));
            for (int leaf = 0; leaf < n; ++leaf) {
                std::vector<int> path;
                for (int v = leaf; v != s; v = parent[static_cast<std::size_t>(v)]) path.push_back(parent_edge[static_cast<std::size_t>(v)]);
                std::sort(path.begin(), path.end());
                leaf_paths[static_cast<std::size_t>(s)][static_cast<std::size_t>(leaf)] = std::move(path);
            }
        }
        for (int p = 0; p < layout.num_positions(); ++p) {
            const Pair q = layout.position(p);
            t.paths.push_back(leaf_paths[static_cast<std::size_t>(q.i)][static_cast<std::size_t>(q.j)]);
        }
        // The split pairing is the one whose two paths share no edge.
        for (const auto& qd : quads) {
            const std::array<std::array<int, 4>, 3> pairings = {{{qd[0], qd[1], qd[2], qd[3]}, {qd[0], qd[2], qd[1], qd[3]}, {qd[0], qd[3], qd[1], qd[2]}}};
            int split = 0;
            for (int k = 0; k < 3; ++k) {
                const auto& a = leaf_paths[static_cast<std::size_t>(pairings[static_cast<std::size_t>(k)][0])][static_cast<std::size_t>(pairings[static_cast<std::size_t>(k)][1])];
                const auto& b = leaf_paths[static_cast<std::size_t>(pairings[static_cast<std::size_t>(k)][2])][static_cast<std::size_t>(pairings[static_cast<std::size_t>(k)][3])];
                std::vector<int> common;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
                if (common.empty()) split = k;
            }
            t.quartet_split.push_back(split);
        }
        out.push_back(std::move(t));
    }
    return cache.emplace(n, std::move(out)).first->second;
}

// Per quadruple: lower bounds on the three pairings and whether each is pinned.
struct QuartetBounds {
    std::array<Rational, 3> lo;
    std::array<bool, 3> exact;
};

std::vector<QuartetBounds> quartet_bounds(const DissimilarityMatrix& m, const std::vector<char>& in)
{
    std::vector<QuartetBounds> out;
    for (const auto& q : quadruples(m.size())) {
        const std::array<std::pair<Pair, Pair>, 3> pairings = {{{Pair{q[0], q[1]}, Pair{q[2], q[3]}},
                                                                {Pair{q[0], q[2]}, Pair{q[1], q[3]}},
                                                                {Pair{q[0], q[3]}, Pair{q[1], q[2]}}}};
        QuartetBounds b;
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& [p1, p2] = pairings[k];
            b.lo[k] = m(p1.i, p1.j) + m(p2.i, p2.j);
            b.exact[k] = in[static_cast<std::size_t>(m.position_index(p1.i, p1.j))] && in[static_cast<std::size_t>(m.position_index(p2.i, p2.j))];
        }
        out.push_back(b);
    }
    return out;
}

// Can a tree with split s on this quadruple meet the bounds? Non-split pairings tie at the minimum.
bool quartet_compatible(const QuartetBounds& b, int s)
{
    const auto a = static_cast<std::size_t>((s + 1) % 3);
    const auto c = static_cast<std::size_t>((s + 2) % 3);
    const auto sp = static_cast<std::size_t>(s);
    Rational tie;
    if (b.exact[a] && b.exact[c]) {
        if (b.lo[a] != b.lo[c]) return false;
        tie = b.lo[a];
    } else if (b.exact[a]) {
        if (b.lo[c] > b.lo[a]) return false;
        tie = b.lo[a];
    } else if (b.exact[c]) {
        if (b.lo[a] > b.lo[c]) return false;
        tie = b.lo[c];
    } else {
        tie = max(b.lo[a], b.lo[c]);
    }
    return !b.exact[sp] || b.lo[sp] >= tie;
}

std::optional<WeightedTree> topology_witness(const DissimilarityMatrix& m, const std::vector<char>& in, const Topology& t)
{
    const int n = m.size();
    const int vars = static_cast<int>(t.edges.size());
    std::vector<LinearConstraint> cs;
    for (int p = 0; p < m.num_positions(); ++p) {
        LinearConstraint c{std::vector<Rational>(static_cast<std::size_t>(vars), Rational(0)),
                           in[static_cast<std::size_t>(p)] ? Relation::Equal : Relation::GreaterEqual, m.entries()[static_cast<std::size_t>(p)]};
        for (int e : t.paths[static_cast<std::size_t>(p)]) c.coeffs[static_cast<std::size_t>(e)] = 1;
        cs.push_back(std::move(c));
    }
    for (int e = 0; e < vars; ++e) {
        const auto& [u, v] = t.edges[static_cast<std::size_t>(e)];
        if (u < n || v < n) continue;
        LinearConstraint c{std::vector<Rational>(static_cast<std::size_t>(vars), Rational(0)), Relation::LessEqual, Rational(0)};
        c.coeffs[static_cast<std::size_t>(e)] = 1;
        cs.push_back(std::move(c));
    }
    const auto sol = solve_feasibility(vars, cs);
    if (!sol) return std::nullopt;
    std::vector<TreeEdge> edges;
    for (int e = 0; e < vars; ++e) edges.push_back({t.edges[static_cast<std::size_t>(e)].first, t.edges[static_cast<std::size_t>(e)].second, (*sol)[static_cast<std::size_t>(e)]});
    return WeightedTree(n, 2 * n - 2, std::move(edges));
}

}  // namespace

const std::vector<std::vector<std::pair<int, int>>>& binary_topologies(int n)
{
    static std::mutex mutex;
    static std::map<int, std::vector<std::vector<std::pair<int, int>>>> cache;
    if (n < 3) throw Error("binary topologies need n >= 3");
    const std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Internal vertex ids grow as n, n+1, ...; each insertion subdivides one edge.
    std::vector<std::vector<std::pair<int, int>>> current{{{0, n}, {1, n}, {2, n}}};
    for (int leaf = 3; leaf < n; ++leaf) {
        std::vector<std::vector<std::pair<int, int>>> next;
        const int hub = n + leaf - 2;
        for (const auto& tree : current)
            for (std::size_t e = 0; e < tree.size(); ++e) {
                auto t = tree;
                const auto [u, v] = t[e];
                t[e] = {u, hub};
                t.emplace_back(hub, v);
                t.emplace_back(leaf, hub);
                next.push_back(std::move(t));
            }
        current = std::move(next);
    }
    return cache.emplace(n, std::move(current)).first->second;
}

std::optional<RowVector> symmetric_class_witness(const SymmetricMatrix& m, std::span<const int> cls) { return sum_witness(m, cls); }
std::optional<RowVector> star_class_witness(const DissimilarityMatrix& m, std::span<const int> cls) { return sum_witness(m, cls); }

std::optional<WeightedTree> tree_class_witness(const DissimilarityMatrix& m, std::span<const int> cls)
{
    if (auto v = star_class_witness(m, cls)) return WeightedTree::star(*v);
    const auto in = class_flags(m.num_positions(), cls);
    const auto bounds = quartet_bounds(m, in);
    for (const auto& b : bounds)
        if (!quartet_compatible(b, 0) && !quartet_compatible(b, 1) && !quartet_compatible(b, 2)) return std::nullopt;
    for (const auto& t : topologies(m.size())) {
        bool ok = true;
        for (std::size_t q = 0; q < bounds.size() && ok; ++q) ok = quartet_compatible(bounds[q], t.quartet_split[q]);
        if (!ok) continue;
        if (auto w = topology_witness(m, in, t)) return w;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Assignment search.

std::string to_string(LowerCertificate c)
{
    switch (c) {
    case LowerCertificate::Trivial: return "trivial";
    case LowerCertificate::Chromatic: return "chromatic";
    case LowerCertificate::Exhaustive: return "exhaustive";
    case LowerCertificate::Characterization: return "characterization";
    case LowerCertificate::None: return "none";
    }
    return "?";
}

ExtendedInt RankResult::value() const
{
    if (infinite) return ExtendedInt::infinity();
    if (lower != upper) throw Error("rank only bounded: [" + std::to_string(lower) + ", " + std::to_string(upper) + "]");
    return ExtendedInt(upper);
}

namespace {

template <PackedMatrix M>
class AssignmentSearch {
public:
    AssignmentSearch(const M& m, Notion notion, std::vector<int> order, std::uint64_t max_nodes)
        : m_(m), notion_(notion), order_(std::move(order)), max_nodes_(max_nodes)
    {
        if (m.num_positions() > 64) throw Error("exact search supports at most 64 positions");
    }

    enum class Outcome { Found, NotFound, Aborted };

    Outcome run(int r)
    {
        r_ = r;
        nodes_ = 0;
        aborted_ = false;
        masks_.assign(static_cast<std::size_t>(r), 0);
        return dfs(0, 0) ? Outcome::Found : (aborted_ ? Outcome::Aborted : Outcome::NotFound);
    }

    [[nodiscard]] Decomposition decomposition() const
    {
        Decomposition d{notion_, {}, {}};
        for (std::uint64_t mask : masks_) {
            if (mask == 0) continue;
            d.summands.push_back(witnesses_.at(memo_.at(mask)));
        }
        return d;
    }

private:
    int feasible(std::uint64_t mask, std::uint64_t parent, int added)
    {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        int result = -1;
        // A parent witness that already attains the new position still works.
        if (parent != 0) {
            const int pw = memo_.at(parent);
            if (pw >= 0) {
                const Pair q = m_.position(added);
                const auto& pm = std::get<M>(witnesses_[static_cast<std::size_t>(pw)].matrix);
                if (pm(q.i, q.j) == m_(q.i, q.j)) result = pw;
            }
        }
        if (result < 0) {
            std::vector<int> cls;
            for (int p = 0; p < m_.num_positions(); ++p)
                if (mask >> p & 1U) cls.push_back(p);
            std::optional<Summand> s;
            if constexpr (std::is_same_v<M, SymmetricMatrix>) {
                if (auto v = symmetric_class_witness(m_, cls)) s = symmetric_summand(*v);
            } else if (notion_ == Notion::StarTree) {
                if (auto v = star_class_witness(m_, cls)) s = star_summand(*v);
            } else {
                if (auto t = tree_class_witness(m_, cls)) s = tree_summand(*t);
            }
            if (s) {
                result = static_cast<int>(witnesses_.size());
                witnesses_.push_back(std::move(*s));
            }
        }
        memo_.emplace(mask, result);
        return result;
    }

    bool dfs(std::size_t k, int used)
    {
        if (aborted_) return false;
        if (++nodes_ > max_nodes_) {
            aborted_ = true;
            return false;
        }
        if (k == order_.size()) return true;
        const int pos = order_[k];
        const std::uint64_t bit = std::uint64_t{1} << pos;
        for (int c = 0; c < std::min(used + 1, r_); ++c) {
            const std::uint64_t parent = masks_[static_cast<std::size_t>(c)];
            if (feasible(parent | bit, parent, pos) < 0) continue;
            masks_[static_cast<std::size_t>(c)] = parent | bit;
            const int next_used = std::max(used, c + 1);
            if (next_used < r_ || forward_check(k + 1)) {
                if (dfs(k + 1, next_used)) return true;
            }
            masks_[static_cast<std::size_t>(c)] = parent;
            if (aborted_) return false;
        }
        return false;
    }

    // With every summand opened, each remaining position must fit some class.
    bool forward_check(std::size_t from)
    {
        for (std::size_t k = from; k < order_.size(); ++k) {
            const int pos = order_[k];
            const std::uint64_t bit = std::uint64_t{1} << pos;
            bool fits = false;
            for (int c = 0; c < r_ && !fits; ++c) {
                const std::uint64_t parent = masks_[static_cast<std::size_t>(c)];
                fits = feasible(parent | bit, parent, pos) >= 0;
            }
            if (!fits) return false;
        }
        return true;
    }

    const M& m_;
    Notion notion_;
    std::vector<int> order_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    int r_ = 0;
    std::vector<std::uint64_t> masks_;
    std::unordered_map<std::uint64_t, int> memo_{{0, -1}};
    std::vector<Summand> witnesses_;
};

template <PackedMatrix M>
RankResult exact_rank_impl(const M& m, Notion notion, const RankOptions& options)
{
    RankResult res;
    res.notion = notion;
    res.method = "exact";
    const auto h = build_deficiency(m, basis_for(notion));
    const auto chi = chromatic_number(h, options.coloring);
    if (chi.infinite) {
        res.infinite = true;
        res.infinite_witness = m.position(chi.loop_vertex);
        res.lower = res.upper = 0;
        res.chromatic = 0;
        res.lower_certificate = LowerCertificate::Chromatic;
        return res;
    }
    res.chromatic = chi.lower;
    res.chromatic_exact = chi.exact;

    Decomposition upper = upper_decomposition(AnyMatrix(m), notion);
    res.upper = upper.size();
    res.decomposition = upper;
    res.lower = options.use_chromatic_bound ? std::min(chi.lower, res.upper) : 1;
    res.lower_certificate = res.lower == 1 ? LowerCertificate::Trivial : LowerCertificate::Chromatic;
    if (res.lower == res.upper) return res;
    if (m.num_positions() > 64) {
        // Beyond the search's bitmask width only the bounds are reported.
        res.method = "bounds";
        return res;
    }

    std::vector<int> degree(static_cast<std::size_t>(m.num_positions()), 0);
    for (const auto& e : h.hyperedges)
        for (int v : e) ++degree[static_cast<std::size_t>(v)];
    std::vector<int> order(static_cast<std::size_t>(m.num_positions()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)]; });

    AssignmentSearch<M> search(m, notion, order, options.max_nodes);
    const int last = options.budget > 0 ? std::min(options.budget, res.upper - 1) : res.upper - 1;
    for (int r = res.lower; r <= last; ++r) {
        const auto outcome = search.run(r);
        if (outcome == AssignmentSearch<M>::Outcome::Found) {
            Decomposition d = search.decomposition();
            const auto rep = verify(m, d);
            if (!rep.ok) throw Error("internal: search decomposition failed verification: " + rep.message);
            res.upper = d.size();
            res.decomposition = std::move(d);
            if (r > res.lower) res.lower_certificate = LowerCertificate::Exhaustive;
            res.lower = r;
            return res;
        }
        if (outcome == AssignmentSearch<M>::Outcome::Aborted) {
            if (r > res.lower) res.lower_certificate = LowerCertificate::Exhaustive;
            res.lower = r;
            return res;
        }
        res.lower = r + 1;
        res.lower_certificate = LowerCertificate::Exhaustive;
    }
    return res;
}

}  // namespace

RankResult exact_rank(const SymmetricMatrix& m, const RankOptions& options)
{
    if (auto w = infinite_rank_witness(m)) {
        RankResult res;
        res.notion = Notion::SymmetricBarvinok;
        res.infinite = true;
        res.infinite_witness = w;
        res.lower = res.upper = res.chromatic = 0;
        res.lower_certificate = LowerCertificate::Chromatic;
        res.method = "exact";
        return res;
    }
    return exact_rank_impl(m, Notion::SymmetricBarvinok, options);
}

RankResult exact_rank(const DissimilarityMatrix& m, Notion notion, const RankOptions& options)
{
    if (notion == Notion::SymmetricBarvinok) throw Error("symmetric Barvinok rank needs a symmetric matrix");
    return exact_rank_impl(m, notion, options);
}

RankResult exact_rank(const AnyMatrix& m, Notion notion, const RankOptions& options)
{
    if (const auto* s = std::get_if<SymmetricMatrix>(&m)) {
        if (notion != Notion::SymmetricBarvinok) return exact_rank(project(*s), notion, options);
        return exact_rank(*s, options);
    }
    return exact_rank(std::get<DissimilarityMatrix>(m), notion, options);
}

RankResult rank_bounds(const AnyMatrix& any, Notion notion, const ColoringLimits& coloring)
{
    AnyMatrix m = any;
    if (notion != Notion::SymmetricBarvinok)
        if (const auto* s = std::get_if<SymmetricMatrix>(&any)) m = project(*s);
    RankResult res;
    res.notion = notion;
    res.method = "bounds";
    if (const auto* s = std::get_if<SymmetricMatrix>(&m)) {
        if (notion != Notion::SymmetricBarvinok) throw Error("internal: projection failed");
        if (auto w = infinite_rank_witness(*s)) {
            res.infinite = true;
            res.infinite_witness = w;
            res.lower = res.upper = res.chromatic = 0;
            res.lower_certificate = LowerCertificate::Chromatic;
            return res;
        }
    } else if (notion == Notion::SymmetricBarvinok) {
        throw Error("symmetric Barvinok rank needs a symmetric matrix");
    }
    const auto chi = std::visit([&](const auto& x) { return chromatic_number(build_deficiency(x, basis_for(notion)), coloring); }, m);
    res.chromatic = chi.lower;
    res.chromatic_exact = chi.exact;
    res.decomposition = upper_decomposition(m, notion);
    res.upper = res.decomposition->size();
    res.lower = std::min(chi.lower, res.upper);
    res.lower_certificate = res.lower == 1 ? LowerCertificate::Trivial : LowerCertificate::Chromatic;
    return res;
}

namespace {

template <typename Fn>
std::vector<RankResult> batch(std::size_t count, Execution exec, Fn&& fn)
{
    std::vector<RankResult> out(count);
    const auto n = static_cast<long long>(count);
    if (exec == Execution::Parallel) {
        std::vector<std::string> errors(count);
#pragma omp parallel for schedule(dynamic)
        for (long long k = 0; k < n; ++k) {
            try {
                out[static_cast<std::size_t>(k)] = fn(static_cast<std::size_t>(k));
            } catch (const std::exception& e) {
                errors[static_cast<std::size_t>(k)] = e.what();
            }
        }
        for (const auto& e : errors)
            if (!e.empty()) throw Error(e);
    } else {
        for (long long k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = fn(static_cast<std::size_t>(k));
    }
    return out;
}

}  // namespace

std::vector<RankResult> exact_rank_batch(std::span<const DissimilarityMatrix> ms, Notion notion, Execution exec, const RankOptions& options)
{
    return batch(ms.size(), exec, [&](std::size_t k) { return exact_rank(ms[k], notion, options); });
}

std::vector<RankResult> exact_rank_batch(std::span<const SymmetricMatrix> ms, Execution exec, const RankOptions& options)
{
    return batch(ms.size(), exec, [&](std::size_t k) { return exact_rank(ms[k], options); });
}

}  // namespace troprank
