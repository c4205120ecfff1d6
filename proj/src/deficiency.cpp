#include "troprank/deficiency.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace troprank {

std::optional<int> DeficiencyHypergraph::loop_vertex() const
{
    for (const auto& e : hyperedges)
        if (e.size() == 1) return e.front();
    return std::nullopt;
}

Graph DeficiencyHypergraph::graph() const
{
    Graph g(num_vertices);
    for (const auto& e : hyperedges) {
        if (e.size() == 2) g.add_edge(e[0], e[1]);
        else if (e.size() > 2) throw Error("deficiency hypergraph has a hyperedge of size > 2");
    }
    return g;
}

const std::vector<TropicalPolynomial>& cached_basis(Basis basis, int n)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::vector<TropicalPolynomial>> cache;
    const std::lock_guard lock(mutex);
    const auto key = std::make_pair(static_cast<int>(basis), n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, tropical_basis(basis, n)).first;
    return it->second;
}

namespace {

template <PackedMatrix M>
DeficiencyHypergraph build(const M& m, Basis basis, Execution exec)
{
    const auto& polys = cached_basis(basis, m.size());
    const auto point = m.entries();
    const int count = static_cast<int>(polys.size());
    // Per-polynomial slot filled independently, merged in polynomial order.
    std::vector<std::vector<int>> slot(static_cast<std::size_t>(count));

    auto work = [&](int k) {
        const auto& p = polys[static_cast<std::size_t>(k)];
        const auto ev = evaluate(p, point);
        if (ev.vanishes()) return;
        std::vector<int> e;
        for (const auto& [pos, exp] : p.monomials[static_cast<std::size_t>(ev.minimizers.front())].exponents)
            if (exp != 0) e.push_back(pos);
        std::sort(e.begin(), e.end());
        slot[static_cast<std::size_t>(k)] = std::move(e);
    };
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
        for (int k = 0; k < count; ++k) work(k);
    } else {
        for (int k = 0; k < count; ++k) work(k);
    }

    DeficiencyHypergraph h;
    h.basis = basis;
    h.n = m.size();
    h.num_vertices = m.num_positions();
    for (int k = 0; k < h.num_vertices; ++k) h.vertex_labels.push_back(pair_label(m.position(k)));
    std::map<std::vector<int>, std::size_t> index;
    for (int k = 0; k < count; ++k) {
        auto& e = slot[static_cast<std::size_t>(k)];
        if (e.empty()) continue;
        auto [it, fresh] = index.emplace(e, h.hyperedges.size());
        if (fresh) {
            h.hyperedges.push_back(e);
            h.sources.emplace_back();
        }
        h.sources[it->second].push_back(polys[static_cast<std::size_t>(k)].label);
    }
    // Canonical order so serial and parallel builds compare equal.
    std::vector<std::size_t> order(h.hyperedges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return h.hyperedges[a] < h.hyperedges[b]; });
    DeficiencyHypergraph sorted = h;
    for (std::size_t k = 0; k < order.size(); ++k) {
        sorted.hyperedges[k] = h.hyperedges[order[k]];
        sorted.sources[k] = h.sources[order[k]];
    }
    return sorted;
}

}  // namespace

DeficiencyHypergraph build_deficiency(const SymmetricMatrix& m, Basis basis, Execution exec)
{
    if (basis != Basis::SymmetricMinors) throw Error("basis " + to_string(basis) + " applies to dissimilarity matrices");
    return build(m, basis, exec);
}

DeficiencyHypergraph build_deficiency(const DissimilarityMatrix& m, Basis basis, Execution exec)
{
    if (basis == Basis::SymmetricMinors) throw Error("the minors basis applies to symmetric matrices");
    return build(m, basis, exec);
}

ExtendedInt ChromaticNumber::value() const
{
    if (infinite) return ExtendedInt::infinity();
    if (!exact) throw Error("chromatic number only bounded: [" + std::to_string(lower) + ", " + std::to_string(upper) + "]");
    return ExtendedInt(upper);
}

ChromaticNumber chromatic_number(const DeficiencyHypergraph& h, const ColoringLimits& limits)
{
    ChromaticNumber out;
    if (auto loop = h.loop_vertex()) {
        out.infinite = true;
        out.loop_vertex = *loop;
        out.lower = out.upper = 0;
        return out;
    }
    const auto res = color_graph(h.graph(), limits);
    out.lower = std::max(1, res.lower);
    out.upper = std::max(1, res.upper);
    out.exact = res.exact;
    out.colors = res.colors;
    return out;
}

ExtendedInt rank_lower_bound(const SymmetricMatrix& m, Basis basis)
{
    return chromatic_number(build_deficiency(m, basis)).lower_bound();
}

ExtendedInt rank_lower_bound(const DissimilarityMatrix& m, Basis basis)
{
    return chromatic_number(build_deficiency(m, basis)).lower_bound();
}

int petersen_vertex(int i, int j)
{
    if (i > j) std::swap(i, j);
    if (i < 0 || j > 4 || i == j) throw Error("Petersen vertices are pairs of distinct indices in [5]");
    return i * (2 * 5 - i - 1) / 2 + (j - i - 1);
}

namespace {

const std::array<Pair, 10>& petersen_pairs()
{
    static const std::array<Pair, 10> pairs = [] {
        std::array<Pair, 10> out{};
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) out[static_cast<std::size_t>(petersen_vertex(i, j))] = {i, j};
        return out;
    }();
    return pairs;
}

using EdgeList = std::vector<std::pair<int, int>>;

std::pair<int, int> norm(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

EdgeList normalized(EdgeList edges)
{
    for (auto& e : edges) e = norm(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

EdgeList relabel(const EdgeList& edges, const std::array<int, 5>& sigma)
{
    const auto& pairs = petersen_pairs();
    EdgeList out;
    for (const auto& [a, b] : edges) {
        const Pair pa = pairs[static_cast<std::size_t>(a)];
        const Pair pb = pairs[static_cast<std::size_t>(b)];
        out.push_back(norm(petersen_vertex(sigma[static_cast<std::size_t>(pa.i)], sigma[static_cast<std::size_t>(pa.j)]),
                           petersen_vertex(sigma[static_cast<std::size_t>(pb.i)], sigma[static_cast<std::size_t>(pb.j)])));
    }
    return normalized(std::move(out));
}

EdgeList from_labels(std::initializer_list<std::pair<const char*, const char*>> labels)
{
    EdgeList out;
    for (const auto& [a, b] : labels)
        out.push_back(norm(petersen_vertex(a[0] - '1', a[1] - '1'), petersen_vertex(b[0] - '1', b[1] - '1')));
    return normalized(std::move(out));
}

std::optional<std::array<int, 5>> find_relabeling(const EdgeList& canonical, const EdgeList& target)
{
    std::array<int, 5> sigma{0, 1, 2, 3, 4};
    do {
        if (relabel(canonical, sigma) == target) return sigma;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

// Even cycles of the Petersen graph as vertex sequences (each undirected cycle once).
const std::vector<std::vector<int>>& petersen_even_cycles()
{
    static const std::vector<std::vector<int>> cycles = [] {
        const Graph& g = petersen_graph();
        std::vector<std::vector<int>> out;
        for (int len : {6, 8}) {
            std::vector<int> path;
            std::vector<char> used(10, 0);
            auto dfs = [&](auto&& self) -> void {
                const int last = path.back();
                if (static_cast<int>(path.size()) == len) {
                    // Count each cycle once: smallest vertex first, second < last.
                    if (g.adjacent(last, path.front()) && path[1] < path.back()) out.push_back(path);
                    return;
                }
                for (int w : g.neighbors(last)) {
                    if (used[static_cast<std::size_t>(w)] || w < path.front()) continue;
                    used[static_cast<std::size_t>(w)] = 1;
                    path.push_back(w);
                    self(self);
                    path.pop_back();
                    used[static_cast<std::size_t>(w)] = 0;
                }
            };
            for (int s = 0; s < 10; ++s) {
                path = {s};
                used.assign(10, 0);
                used[static_cast<std::size_t>(s)] = 1;
                dfs(dfs);
            }
        }
        return out;
    }();
    return cycles;
}

}  // namespace

const Graph& petersen_graph()
{
    static const Graph g = [] {
        Graph out(10);
        const auto& pairs = petersen_pairs();
        for (int a = 0; a < 10; ++a)
            for (int b = a + 1; b < 10; ++b) {
                const Pair p = pairs[static_cast<std::size_t>(a)];
                const Pair q = pairs[static_cast<std::size_t>(b)];
                if (p.i != q.i && p.i != q.j && p.j != q.i && p.j != q.j) out.add_edge(a, b);
            }
        return out;
    }();
    return g;
}

std::string to_string(PetersenClass c)
{
    switch (c) {
    case PetersenClass::Trivial: return "Trivial";
    case PetersenClass::FewerThan5Edges: return "FewerThan5Edges";
    case PetersenClass::Figure3TypeA: return "Figure3TypeA";
    case PetersenClass::Figure3TypeB: return "Figure3TypeB";
    case PetersenClass::FiveCycle: return "FiveCycle";
    case PetersenClass::Other: return "Other";
    }
    return "?";
}

// Both types have a degree-3 vertex 12; type A also has a second degree-3 vertex 45.
const std::vector<std::pair<int, int>>& type_a_edges()
{
    static const EdgeList edges = from_labels({{"12", "34"}, {"12", "35"}, {"12", "45"}, {"13", "45"}, {"23", "45"}});
    return edges;
}

const std::vector<std::pair<int, int>>& type_b_edges()
{
    static const EdgeList edges = from_labels({{"12", "34"}, {"12", "35"}, {"12", "45"}, {"13", "45"}, {"24", "35"}});
    return edges;
}

PetersenClassification classify_petersen_graph(const std::vector<std::pair<int, int>>& edges)
{
    PetersenClassification out;
    out.edges = normalized(edges);
    const Graph& p = petersen_graph();
    for (const auto& [a, b] : out.edges)
        if (!p.adjacent(a, b)) throw Error("edge is not an edge of the Petersen graph");

    const auto count = out.edges.size();
    if (count == 0) {
        out.kind = PetersenClass::Trivial;
    } else if (count < 5) {
        out.kind = PetersenClass::FewerThan5Edges;
    } else if (auto s = find_relabeling(type_a_edges(), out.edges)) {
        out.kind = PetersenClass::Figure3TypeA;
        out.relabeling = s;
    } else if (auto s2 = find_relabeling(type_b_edges(), out.edges)) {
        out.kind = PetersenClass::Figure3TypeB;
        out.relabeling = s2;
    } else {
        out.kind = PetersenClass::Other;
        if (count == 5) {
            Graph g(10);
            for (const auto& [a, b] : out.edges) g.add_edge(a, b);
            int touched = 0;
            bool all_two = true;
            for (int v = 0; v < 10; ++v) {
                if (g.degree(v) == 0) continue;
                ++touched;
                all_two = all_two && g.degree(v) == 2;
            }
            if (all_two && touched == 5 && g.components().size() == 6) out.kind = PetersenClass::FiveCycle;
        }
    }
    return out;
}

PetersenClassification classify_petersen(const DissimilarityMatrix& m)
{
    if (m.size() != 5) throw Error("Petersen classification needs n = 5");
    const auto h = build_deficiency(m, Basis::Pluecker);
    EdgeList edges;
    for (const auto& e : h.hyperedges) {
        const Pair a = m.position(e[0]);
        const Pair b = m.position(e[1]);
        edges.emplace_back(petersen_vertex(a.i, a.j), petersen_vertex(b.i, b.j));
    }
    return classify_petersen_graph(edges);
}

std::optional<std::vector<int>> alternating_even_cycle(const std::vector<std::pair<int, int>>& h)
{
    const EdgeList edges = normalized(h);
    const Graph& p = petersen_graph();
    for (const auto& [a, b] : edges)
        if (!p.adjacent(a, b)) throw Error("edge is not an edge of the Petersen graph");
    for (const auto& cycle : petersen_even_cycles()) {
        const std::size_t len = cycle.size();
        bool alternates = true;
        bool prev = false;
        for (std::size_t t = 0; t < len && alternates; ++t) {
            const bool member = std::binary_search(edges.begin(), edges.end(), norm(cycle[t], cycle[(t + 1) % len]));
            if (t > 0 && member == prev) alternates = false;
            prev = member;
        }
        if (alternates) return cycle;
    }
    return std::nullopt;
}

std::string to_dot(const DeficiencyHypergraph& h)
{
    std::ostringstream os;
    os << "graph deficiency {\n";
    for (int v = 0; v < h.num_vertices; ++v) os << "  v" << v << " [label=\"" << h.vertex_labels[static_cast<std::size_t>(v)] << "\"];\n";
    for (const auto& e : h.hyperedges) {
        if (e.size() == 1) os << "  v" << e[0] << " -- v" << e[0] << ";\n";
        else if (e.size() == 2) os << "  v" << e[0] << " -- v" << e[1] << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace troprank
