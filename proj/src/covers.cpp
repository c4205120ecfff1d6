#include "troprank/covers.hpp"

#include "troprank/rank_engine.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <unordered_map>

namespace troprank {

namespace {

constexpr int kMaxItems = 256;
using Bits = std::bitset<kMaxItems>;

int edge_index(int n, int i, int j)
{
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

int num_pairs(int n) { return n * (n - 1) / 2; }

void check_scale(const Graph& g)
{
    if (num_pairs(g.size()) + g.size() > kMaxItems) throw Error("graph too large for exact cover search (at most 22 vertices)");
}

Bits edge_bits(const Graph& g, const CoverElement& e)
{
    Bits b;
    for (const auto& [i, j] : e.edges()) b.set(static_cast<std::size_t>(edge_index(g.size(), i, j)));
    return b;
}

Bits all_edges(const Graph& g)
{
    Bits b;
    for (const auto& [i, j] : g.edges()) b.set(static_cast<std::size_t>(edge_index(g.size(), i, j)));
    return b;
}

// Exact set cover by iterative deepening; failed (uncovered, budget) states are memoized.
class SetCover {
public:
    SetCover(std::vector<Bits> sets, Bits universe) : sets_(std::move(sets)), universe_(universe)
    {
        for (const auto& s : sets_) max_set_ = std::max(max_set_, s.count());
    }

    std::optional<std::vector<int>> minimum()
    {
        std::optional<std::vector<int>> found;
        for (int k = 0; !found; ++k) {
            if (k > static_cast<int>(universe_.count())) return std::nullopt;
            enumerate(k, [&](const std::vector<int>& chosen) {
                found = chosen;
                return true;
            });
        }
        return found;
    }

    /// Calls `visit` on every irredundant cover of size at most k until it returns true.
    bool enumerate(int k, const std::function<bool(const std::vector<int>&)>& visit)
    {
        std::vector<int> chosen;
        return search(universe_, k, chosen, visit) == Outcome::Stop;
    }

private:
    enum class Outcome { None, Reached, Stop };

    Outcome search(const Bits& uncovered, int budget, std::vector<int>& chosen, const std::function<bool(const std::vector<int>&)>& visit)
    {
        if (uncovered.none()) return visit(chosen) ? Outcome::Stop : Outcome::Reached;
        if (budget == 0) return Outcome::None;
        if (max_set_ == 0 || uncovered.count() > static_cast<std::size_t>(budget) * max_set_) return Outcome::None;
        if (auto it = failed_.find(uncovered); it != failed_.end() && it->second >= budget) return Outcome::None;

        // Branch on the uncovered item with the fewest covering sets.
        std::size_t best_item = 0;
        std::size_t best_count = sets_.size() + 1;
        for (std::size_t item = uncovered._Find_first(); item < kMaxItems; item = uncovered._Find_next(item)) {
            std::size_t c = 0;
            for (const auto& s : sets_)
                if (s.test(item)) ++c;
            if (c < best_count) {
                best_count = c;
                best_item = item;
            }
        }
        bool reached = false;
        for (std::size_t k = 0; k < sets_.size(); ++k) {
            if (!sets_[k].test(best_item)) continue;
            chosen.push_back(static_cast<int>(k));
            const Outcome o = search(uncovered & ~sets_[k], budget - 1, chosen, visit);
            chosen.pop_back();
            if (o == Outcome::Stop) return o;
            reached = reached || o == Outcome::Reached;
        }
        // A state is memoized only when no cover at all lies below it.
        if (reached) return Outcome::Reached;
        int& f = failed_[uncovered];
        f = std::max(f, budget);
        return Outcome::None;
    }

    std::vector<Bits> sets_;
    Bits universe_;
    std::size_t max_set_ = 0;
    std::unordered_map<Bits, int> failed_;
};

std::vector<int> sorted(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

Graph zero_graph(const SymmetricMatrix& m)
{
    Graph g(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            if (m(i, j).sign() == 0) g.add_edge(i, j);
    return g;
}

Graph zero_graph(const DissimilarityMatrix& m)
{
    Graph g(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            if (m(i, j).sign() == 0) g.add_edge(i, j);
    return g;
}

bool is_zero_one(const SymmetricMatrix& m)
{
    for (const auto& e : m.entries())
        if (e != Rational(0) && e != Rational(1)) return false;
    return true;
}

bool is_zero_one(const DissimilarityMatrix& m)
{
    for (const auto& e : m.entries())
        if (e != Rational(0) && e != Rational(1)) return false;
    return true;
}

std::string to_string(CoverKind k)
{
    switch (k) {
    case CoverKind::Clique: return "clique";
    case CoverKind::Star: return "star";
    case CoverKind::Multipartite: return "multipartite";
    }
    return "?";
}

CoverElement CoverElement::clique(std::vector<int> vertices)
{
    CoverElement e;
    e.kind = CoverKind::Clique;
    e.vertices = sorted(std::move(vertices));
    return e;
}

CoverElement CoverElement::star(int center, std::vector<int> leaves)
{
    CoverElement e;
    e.kind = CoverKind::Star;
    e.center = center;
    e.leaves = sorted(std::move(leaves));
    return e;
}

CoverElement CoverElement::multipartite(std::vector<std::vector<int>> parts)
{
    CoverElement e;
    e.kind = CoverKind::Multipartite;
    for (auto& p : parts) p = sorted(std::move(p));
    std::sort(parts.begin(), parts.end());
    e.parts = std::move(parts);
    return e;
}

std::vector<std::pair<int, int>> CoverElement::edges() const
{
    std::vector<std::pair<int, int>> out;
    switch (kind) {
    case CoverKind::Clique:
        for (std::size_t a = 0; a < vertices.size(); ++a)
            for (std::size_t b = a + 1; b < vertices.size(); ++b) out.emplace_back(std::minmax(vertices[a], vertices[b]));
        break;
    case CoverKind::Star:
        for (int l : leaves) out.emplace_back(std::minmax(center, l));
        break;
    case CoverKind::Multipartite:
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a + 1; b < parts.size(); ++b)
                for (int x : parts[a])
                    for (int y : parts[b]) out.emplace_back(std::minmax(x, y));
        break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> CoverElement::footprint() const
{
    std::vector<int> out;
    switch (kind) {
    case CoverKind::Clique: out = vertices; break;
    case CoverKind::Star:
        out = leaves;
        out.push_back(center);
        break;
    case CoverKind::Multipartite:
        for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        break;
    }
    return sorted(std::move(out));
}

bool is_cover(const Graph& g, const Cover& c, bool vertices_too)
{
    const int n = g.size();
    std::vector<char> edge_hit(static_cast<std::size_t>(n * n), 0);
    std::vector<char> vertex_hit(static_cast<std::size_t>(n), 0);
    for (const auto& e : c.elements) {
        for (int v : e.footprint()) {
            if (v < 0 || v >= n) return false;
            vertex_hit[static_cast<std::size_t>(v)] = 1;
        }
        for (const auto& [i, j] : e.edges()) {
            if (!g.adjacent(i, j)) return false;
            edge_hit[static_cast<std::size_t>(i * n + j)] = 1;
        }
        if (e.kind == CoverKind::Multipartite) {
            std::vector<int> fp = e.footprint();
            if (std::adjacent_find(fp.begin(), fp.end()) != fp.end()) return false;  // parts must be disjoint
        }
    }
    for (const auto& [i, j] : g.edges())
        if (!edge_hit[static_cast<std::size_t>(i * n + j)]) return false;
    if (vertices_too)
        for (int v = 0; v < n; ++v)
            if (!vertex_hit[static_cast<std::size_t>(v)]) return false;
    return true;
}

bool is_solid(const Graph& g, const Cover& c)
{
    const int n = g.size();
    std::vector<char> in_clique(static_cast<std::size_t>(n), 0);
    std::vector<char> is_center(static_cast<std::size_t>(n), 0);
    for (const auto& e : c.elements) {
        if (e.kind == CoverKind::Clique)
            for (int v : e.vertices) in_clique[static_cast<std::size_t>(v)] = 1;
        if (e.kind == CoverKind::Star) is_center[static_cast<std::size_t>(e.center)] = 1;
    }
    auto ok_vertex = [&](int v) { return in_clique[static_cast<std::size_t>(v)] || is_center[static_cast<std::size_t>(v)]; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j) || ok_vertex(i) || ok_vertex(j)) continue;
            const bool same_star = std::any_of(c.elements.begin(), c.elements.end(), [&](const CoverElement& e) {
                return e.kind == CoverKind::Star && std::binary_search(e.leaves.begin(), e.leaves.end(), i) &&
                       std::binary_search(e.leaves.begin(), e.leaves.end(), j);
            });
            if (!same_star) return false;
        }
    return true;
}

bool is_complete_multipartite(const Graph& g)
{
    std::vector<int> touched;
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) > 0) touched.push_back(v);
    for (int a : touched)
        for (int b : touched)
            for (int c : touched)
                if (a != b && b != c && a != c && !g.adjacent(a, b) && !g.adjacent(b, c) && g.adjacent(a, c)) return false;
    return true;
}

Cover min_clique_cover(const Graph& g)
{
    check_scale(g);
    const int n = g.size();
    const int base = num_pairs(n);
    std::vector<CoverElement> cands;
    std::vector<Bits> sets;
    for (auto& q : maximal_cliques(g)) {
        CoverElement e = CoverElement::clique(q);
        Bits b = edge_bits(g, e);
        for (int v : e.vertices) b.set(static_cast<std::size_t>(base + v));
        cands.push_back(std::move(e));
        sets.push_back(b);
    }
    Bits universe = all_edges(g);
    for (int v = 0; v < n; ++v) universe.set(static_cast<std::size_t>(base + v));
    SetCover sc(std::move(sets), universe);
    const auto chosen = sc.minimum();
    Cover out;
    for (int k : *chosen) out.elements.push_back(cands[static_cast<std::size_t>(k)]);
    return out;
}

CliqueStarCover min_clique_star_cover(const Graph& g)
{
    check_scale(g);
    const int n = g.size();
    std::vector<CoverElement> cands;
    for (auto& q : maximal_cliques(g))
        if (q.size() >= 2) cands.push_back(CoverElement::clique(q));
    for (int c = 0; c < n; ++c)
        if (g.degree(c) >= 2) cands.push_back(CoverElement::star(c, g.neighbors(c)));
    std::vector<Bits> sets;
    for (const auto& e : cands) sets.push_back(edge_bits(g, e));
    SetCover sc(sets, all_edges(g));
    const auto best = sc.minimum();
    auto to_cover = [&](const std::vector<int>& chosen) {
        Cover c;
        for (int k : chosen) c.elements.push_back(cands[static_cast<std::size_t>(k)]);
        return c;
    };
    CliqueStarCover out;
    out.cover = to_cover(*best);
    if (is_solid(g, out.cover)) {
        out.solid = true;
        return out;
    }
    // Search every minimum cover for a solid one; maximal elements only help solidity.
    SetCover all(sets, all_edges(g));
    all.enumerate(static_cast<int>(best->size()), [&](const std::vector<int>& chosen) {
        Cover c = to_cover(chosen);
        if (!is_solid(g, c)) return false;
        out.cover = std::move(c);
        out.solid = true;
        return true;
    });
    return out;
}

namespace {

// Maximal complete multipartite subgraphs (by edge set), enumerated as partial
// partitions of the non-isolated vertices whose cross pairs are all edges.
std::vector<CoverElement> maximal_multipartite(const Graph& g)
{
    const int n = g.size();
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 0) verts.push_back(v);
    std::vector<std::pair<Bits, std::vector<std::vector<int>>>> found;
    std::unordered_map<Bits, int> seen;
    std::vector<std::vector<int>> parts;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == verts.size()) {
            int nonempty = 0;
            for (const auto& p : parts) nonempty += p.empty() ? 0 : 1;
            if (nonempty < 2) return;
            CoverElement e = CoverElement::multipartite(parts);
            Bits b = edge_bits(g, e);
            if (seen.emplace(b, 1).second) found.emplace_back(b, e.parts);
            return;
        }
        const int v = verts[k];
        rec(k + 1);  // v unused
        for (std::size_t p = 0; p <= parts.size(); ++p) {
            bool ok = true;
            for (std::size_t q = 0; q < parts.size() && ok; ++q)
                if (q != p)
                    for (int u : parts[q])
                        if (!g.adjacent(u, v)) {
                            ok = false;
                            break;
                        }
            if (!ok) continue;
            if (p == parts.size()) parts.emplace_back();
            parts[p].push_back(v);
            rec(k + 1);
            parts[p].pop_back();
            if (parts[p].empty()) parts.pop_back();
        }
    };
    rec(0);
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first.count() > b.first.count(); });
    std::vector<std::pair<Bits, std::vector<std::vector<int>>>> kept;
    for (auto& f : found) {
        const bool dominated =
            std::any_of(kept.begin(), kept.end(), [&](const auto& k) { return (f.first & ~k.first).none(); });
        if (!dominated) kept.push_back(std::move(f));
    }
    std::vector<CoverElement> out;
    for (auto& k : kept) out.push_back(CoverElement::multipartite(std::move(k.second)));
    return out;
}

}  // namespace

Cover min_multipartite_cover(const Graph& g)
{
    if (g.size() > 12) throw Error("multipartite cover search supports at most 12 vertices");
    const auto cands = maximal_multipartite(g);
    std::vector<Bits> sets;
    for (const auto& e : cands) sets.push_back(edge_bits(g, e));
    SetCover sc(std::move(sets), all_edges(g));
    const auto chosen = sc.minimum();
    Cover out;
    for (int k : *chosen) out.elements.push_back(cands[static_cast<std::size_t>(k)]);
    return out;
}

ExtendedInt ZeroOneRank::value() const
{
    if (infinite) return ExtendedInt::infinity();
    if (lower != upper) throw Error("rank is only bounded: [" + std::to_string(lower) + ", " + std::to_string(upper) + "]");
    return ExtendedInt(upper);
}

ZeroOneRank symmetric_rank_01(const SymmetricMatrix& m)
{
    if (!is_zero_one(m)) throw Error("symmetric_rank_01 needs a 0/1 matrix");
    ZeroOneRank out;
    out.notion = Notion::SymmetricBarvinok;
    out.method = "clique-cover";
    if (auto w = infinite_rank_witness(m)) {
        out.infinite = true;
        out.infinite_witness = w;
        return out;
    }
    const int n = m.size();
    std::vector<int> zero_diag;
    for (int i = 0; i < n; ++i)
        if (m(i, i).sign() == 0) zero_diag.push_back(i);
    const bool extra = static_cast<int>(zero_diag.size()) < n;
    Cover cover;
    if (!zero_diag.empty()) {
        const Graph sub = zero_graph(m.principal(zero_diag));
        for (auto e : min_clique_cover(sub).elements) {
            for (int& v : e.vertices) v = zero_diag[static_cast<std::size_t>(v)];
            cover.elements.push_back(CoverElement::clique(e.vertices));
        }
    }
    out.cover = cover;
    out.lower = out.upper = cover.size() + (extra ? 1 : 0);
    out.solid = true;
    Decomposition d{Notion::SymmetricBarvinok, {}, {}};
    for (const auto& e : cover.elements) {
        RowVector v(static_cast<std::size_t>(n), Rational(1));
        for (int i : e.vertices) v[static_cast<std::size_t>(i)] = 0;
        d.summands.push_back(symmetric_summand(std::move(v)));
    }
    if (extra) d.summands.push_back(symmetric_summand(RowVector(static_cast<std::size_t>(n), Rational(1, 2))));
    if (!verify(m, d).ok) throw Error("internal: clique cover decomposition failed to verify");
    out.decomposition = std::move(d);
    return out;
}

Decomposition star_cover_decomposition(int n, const Cover& c, bool add_all_ones)
{
    Decomposition d{Notion::StarTree, {}, {}};
    for (const auto& e : c.elements) {
        RowVector v;
        if (e.kind == CoverKind::Clique) {
            v.assign(static_cast<std::size_t>(n), Rational(1));
            for (int i : e.vertices) v[static_cast<std::size_t>(i)] = 0;
        } else if (e.kind == CoverKind::Star) {
            v.assign(static_cast<std::size_t>(n), Rational(3, 2));
            v[static_cast<std::size_t>(e.center)] = Rational(-1, 2);
            for (int i : e.leaves) v[static_cast<std::size_t>(i)] = Rational(1, 2);
        } else {
            throw Error("a star tree cover holds only cliques and stars");
        }
        d.summands.push_back(star_summand(std::move(v)));
    }
    if (add_all_ones || d.summands.empty()) d.summands.push_back(star_summand(RowVector(static_cast<std::size_t>(n), Rational(1, 2))));
    return d;
}

ZeroOneRank star_tree_rank_01(const DissimilarityMatrix& m, const StarRank01Options& options)
{
    if (!is_zero_one(m)) throw Error("star_tree_rank_01 needs a 0/1 matrix");
    const int n = m.size();
    const Graph g = zero_graph(m);
    auto cs = min_clique_star_cover(g);
    ZeroOneRank out;
    out.notion = Notion::StarTree;
    out.method = "clique-star-cover";
    out.cover = cs.cover;
    out.solid = cs.solid;
    const int r = cs.cover.size();
    if (r == 0) {
        out.lower = out.upper = 1;
        out.decomposition = star_cover_decomposition(n, cs.cover, true);
        return out;
    }
    out.lower = r;
    if (cs.solid) {
        out.upper = r;
        out.decomposition = star_cover_decomposition(n, cs.cover, false);
        if (!verify(m, *out.decomposition).ok) throw Error("internal: solid cover decomposition failed to verify");
        return out;
    }
    out.upper = r + 1;
    out.decomposition = star_cover_decomposition(n, cs.cover, true);
    if (!verify(m, *out.decomposition).ok) throw Error("internal: cover decomposition failed to verify");
    if (n <= options.resolve_up_to_n) {
        RankOptions ro;
        ro.budget = r;
        const auto exact = exact_rank(m, Notion::StarTree, ro);
        if (exact.determined() && exact.upper == r) {
            out.upper = r;
            out.weakening_example = true;
            out.decomposition = exact.decomposition;
            out.method = "clique-star-cover+exact";
        } else if (exact.lower > r) {
            out.lower = r + 1;
            out.method = "clique-star-cover+exact";
        }
    }
    return out;
}

Decomposition multipartite_cover_decomposition(int n, const Cover& c, bool add_all_ones)
{
    Decomposition d{Notion::Tree, {}, {}};
    for (const auto& e : c.elements) {
        if (e.kind != CoverKind::Multipartite) throw Error("a tree cover holds only multipartite elements");
        const int hub = n;
        std::vector<TreeEdge> edges;
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        for (std::size_t p = 0; p < e.parts.size(); ++p) {
            const int vp = n + 1 + static_cast<int>(p);
            edges.push_back({vp, hub, Rational(-1, 2)});
            for (int leaf : e.parts[p]) {
                edges.push_back({leaf, vp, Rational(1, 2)});
                used[static_cast<std::size_t>(leaf)] = 1;
            }
        }
        for (int leaf = 0; leaf < n; ++leaf)
            if (!used[static_cast<std::size_t>(leaf)]) edges.push_back({leaf, hub, Rational(1)});
        d.summands.push_back(tree_summand(WeightedTree(n, n + 1 + static_cast<int>(e.parts.size()), std::move(edges))));
    }
    if (add_all_ones || d.summands.empty())
        d.summands.push_back(tree_summand(WeightedTree::star(RowVector(static_cast<std::size_t>(n), Rational(1, 2)))));
    return d;
}

ZeroOneRank tree_rank_01(const DissimilarityMatrix& m)
{
    if (!is_zero_one(m)) throw Error("tree_rank_01 needs a 0/1 matrix");
    const int n = m.size();
    const Graph g = zero_graph(m);
    ZeroOneRank out;
    out.notion = Notion::Tree;
    out.method = "multipartite-cover";
    out.cover = min_multipartite_cover(g);
    int isolated = 0;
    for (int v = 0; v < n; ++v) isolated += g.degree(v) == 0 ? 1 : 0;
    const bool extra = isolated > 1;
    out.lower = out.upper = out.cover.size() + (extra ? 1 : 0);
    out.decomposition = multipartite_cover_decomposition(n, out.cover, extra);
    if (!verify(m, *out.decomposition).ok) throw Error("internal: multipartite cover decomposition failed to verify");
    return out;
}

std::optional<RamseyCover> cover_via_ramsey_witness(const Graph& g, int k)
{
    if (k < 1) throw Error("Ramsey witness size must be positive");
    const int n = g.size();
    RamseyCover out;
    auto outside = [&](const std::vector<int>& w) {
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!std::binary_search(w.begin(), w.end(), v)) rest.push_back(v);
        return rest;
    };
    if (auto q = find_clique(g, k)) {
        out.from_clique = true;
        out.witness = sorted(*q);
        if (k >= 2) out.cover.elements.push_back(CoverElement::clique(out.witness));
        for (int v : outside(out.witness)) out.cover.elements.push_back(CoverElement::star(v, g.neighbors(v)));
    } else if (auto s = find_clique(g.complement(), k)) {
        out.witness = sorted(*s);
        for (int v : outside(out.witness)) out.cover.elements.push_back(CoverElement::star(v, g.neighbors(v)));
    } else {
        return std::nullopt;
    }
    out.solid = is_solid(g, out.cover);
    return out;
}

}  // namespace troprank
