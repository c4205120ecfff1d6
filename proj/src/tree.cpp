#include "troprank/tree.hpp"

#include "troprank/membership.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

namespace troprank {

WeightedTree::WeightedTree(int num_leaves, int num_vertices, std::vector<TreeEdge> edges)
    : num_leaves_(num_leaves), num_vertices_(num_vertices), edges_(std::move(edges))
{
    validate();
}

WeightedTree WeightedTree::star(std::span<const Rational> pendant)
{
    const int n = static_cast<int>(pendant.size());
    std::vector<TreeEdge> edges;
    edges.reserve(pendant.size());
    for (int i = 0; i < n; ++i) edges.push_back({i, n, pendant[static_cast<std::size_t>(i)]});
    return {n, n + 1, std::move(edges)};
}

std::vector<std::vector<std::pair<int, Rational>>> WeightedTree::adjacency() const
{
    std::vector<std::vector<std::pair<int, Rational>>> adj(static_cast<std::size_t>(num_vertices_));
    for (const auto& e : edges_) {
        adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.weight);
        adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.weight);
    }
    return adj;
}

void WeightedTree::validate() const
{
    if (num_leaves_ < 1 || num_vertices_ < num_leaves_) throw Error("tree: bad vertex counts");
    if (static_cast<int>(edges_.size()) != num_vertices_ - 1) throw Error("tree: edge count must be vertices - 1");
    for (const auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= num_vertices_ || e.v >= num_vertices_ || e.u == e.v) throw Error("tree: bad edge endpoint");
        if (!is_leaf(e.u) && !is_leaf(e.v) && e.weight > 0) throw Error("tree: internal edge with positive weight");
    }
    const auto adj = adjacency();
    for (int leaf = 0; leaf < num_leaves_; ++leaf)
        if (adj[static_cast<std::size_t>(leaf)].size() != 1 && num_vertices_ > 1) throw Error("tree: leaf without degree 1");
    std::vector<char> seen(static_cast<std::size_t>(num_vertices_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        ++count;
        for (const auto& [v, w] : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                stack.push_back(v);
            }
    }
    if (count != num_vertices_) throw Error("tree: not connected");
}

bool WeightedTree::is_valid() const
{
    try {
        validate();
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::vector<Rational> WeightedTree::distances_from(int vertex) const
{
    const auto adj = adjacency();
    std::vector<Rational> dist(static_cast<std::size_t>(num_vertices_));
    std::vector<char> seen(static_cast<std::size_t>(num_vertices_), 0);
    std::vector<int> stack{vertex};
    seen[static_cast<std::size_t>(vertex)] = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const auto& [v, w] : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + w;
                stack.push_back(v);
            }
    }
    return dist;
}

DissimilarityMatrix WeightedTree::distances() const
{
    DissimilarityMatrix m(num_leaves_);
    for (int i = 0; i < num_leaves_; ++i) {
        const auto dist = distances_from(i);
        for (int j = i + 1; j < num_leaves_; ++j) m.set(i, j, dist[static_cast<std::size_t>(j)]);
    }
    return m;
}

std::string WeightedTree::to_newick() const
{
    const auto adj = adjacency();
    const int root = num_vertices_ > num_leaves_ ? num_leaves_ : 0;
    std::function<std::string(int, int)> render = [&](int u, int parent) -> std::string {
        if (is_leaf(u) && parent >= 0) return std::to_string(u + 1);
        std::string out = "(";
        bool first = true;
        for (const auto& [v, w] : adj[static_cast<std::size_t>(u)]) {
            if (v == parent) continue;
            if (!first) out += ",";
            first = false;
            out += render(v, u) + ":" + w.to_decimal_string();
        }
        out += ")";
        if (is_leaf(u)) out += std::to_string(u + 1);
        return out;
    };
    return render(root, -1) + ";";
}

// ---------------------------------------------------------------------------
// Realization by leaf insertion

namespace {

// Mutable tree used while inserting leaves; vertex ids are arbitrary.
struct WorkTree {
    std::vector<std::vector<std::pair<int, Rational>>> adj;

    int add_vertex()
    {
        adj.emplace_back();
        return static_cast<int>(adj.size()) - 1;
    }
    void add_edge(int u, int v, const Rational& w)
    {
        adj[static_cast<std::size_t>(u)].emplace_back(v, w);
        adj[static_cast<std::size_t>(v)].emplace_back(u, w);
    }
    void remove_edge(int u, int v)
    {
        auto drop = [](auto& list, int target) {
            list.erase(std::find_if(list.begin(), list.end(), [&](const auto& e) { return e.first == target; }));
        };
        drop(adj[static_cast<std::size_t>(u)], v);
        drop(adj[static_cast<std::size_t>(v)], u);
    }
    // Vertices on the path from a to b with the cumulative distance from a.
    std::vector<std::pair<int, Rational>> path(int a, int b) const
    {
        std::vector<int> parent(adj.size(), -1);
        std::vector<Rational> dist(adj.size());
        std::vector<int> stack{a};
        parent[static_cast<std::size_t>(a)] = a;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (const auto& [v, w] : adj[static_cast<std::size_t>(u)])
                if (parent[static_cast<std::size_t>(v)] < 0) {
                    parent[static_cast<std::size_t>(v)] = u;
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + w;
                    stack.push_back(v);
                }
        }
        std::vector<std::pair<int, Rational>> out;
        for (int v = b; v != a; v = parent[static_cast<std::size_t>(v)]) out.emplace_back(v, dist[static_cast<std::size_t>(v)]);
        out.emplace_back(a, Rational(0));
        std::reverse(out.begin(), out.end());
        return out;
    }
};

}  // namespace

WeightedTree realize_tree(const DissimilarityMatrix& m)
{
    if (!is_tree_matrix(m)) throw Error("realize_tree: matrix fails the four-point condition");
    const int n = m.size();

    // Shift to a positive tree metric: D(i,j) = 2K - M(i,j) satisfies the
    // max-form four-point condition and, for K large, the triangle inequality
    // with strictly positive pendant lengths.
    const Rational shift = Rational(2) * m.max_abs_entry() + 1;
    auto dist = [&](int i, int j) { return Rational(2) * shift - m(i, j); };

    WorkTree work;
    std::vector<int> leaf_vertex(static_cast<std::size_t>(n));
    leaf_vertex[0] = work.add_vertex();
    leaf_vertex[1] = work.add_vertex();
    work.add_edge(leaf_vertex[0], leaf_vertex[1], dist(0, 1));

    for (int x = 2; x < n; ++x) {
        int best_a = 0;
        int best_b = 1;
        Rational best_len = (dist(x, 0) + dist(x, 1) - dist(0, 1)).half();
        for (int a = 0; a < x; ++a)
            for (int b = a + 1; b < x; ++b) {
                const Rational len = (dist(x, a) + dist(x, b) - dist(a, b)).half();
                if (len < best_len) {
                    best_len = len;
                    best_a = a;
                    best_b = b;
                }
            }
        const Rational offset = dist(x, best_a) - best_len;
        const auto path = work.path(leaf_vertex[static_cast<std::size_t>(best_a)], leaf_vertex[static_cast<std::size_t>(best_b)]);
        int attach = -1;
        for (std::size_t k = 0; k + 1 < path.size() && attach < 0; ++k) {
            const auto& [u, du] = path[k];
            const auto& [v, dv] = path[k + 1];
            if (offset == du) {
                attach = u;
            } else if (offset == dv) {
                attach = v;
            } else if (du < offset && offset < dv) {
                const Rational w = dv - du;
                work.remove_edge(u, v);
                attach = work.add_vertex();
                work.add_edge(u, attach, offset - du);
                work.add_edge(attach, v, w - (offset - du));
            }
        }
        if (attach < 0) throw Error("realize_tree: attachment point not found");
        leaf_vertex[static_cast<std::size_t>(x)] = work.add_vertex();
        work.add_edge(attach, leaf_vertex[static_cast<std::size_t>(x)], best_len);
    }

    // Renumber (leaves first), undo the shift, contract zero internal edges.
    const int total = static_cast<int>(work.adj.size());
    std::vector<int> is_leaf_work(static_cast<std::size_t>(total), -1);
    for (int i = 0; i < n; ++i) is_leaf_work[static_cast<std::size_t>(leaf_vertex[static_cast<std::size_t>(i)])] = i;

    std::vector<int> root(static_cast<std::size_t>(total));
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) { return root[static_cast<std::size_t>(x)] == x ? x : root[static_cast<std::size_t>(x)] = find(root[static_cast<std::size_t>(x)]); };

    struct RawEdge {
        int u, v;
        Rational w;
    };
    std::vector<RawEdge> raw;
    for (int u = 0; u < total; ++u)
        for (const auto& [v, w] : work.adj[static_cast<std::size_t>(u)]) {
            if (u > v) continue;
            const bool pendant = is_leaf_work[static_cast<std::size_t>(u)] >= 0 || is_leaf_work[static_cast<std::size_t>(v)] >= 0;
            const Rational weight = pendant ? shift - w : -w;
            if (!pendant && weight == 0) {
                root[static_cast<std::size_t>(find(u))] = find(v);
                continue;
            }
            raw.push_back({u, v, weight});
        }

    std::vector<int> new_id(static_cast<std::size_t>(total), -1);
    for (int i = 0; i < n; ++i) new_id[static_cast<std::size_t>(leaf_vertex[static_cast<std::size_t>(i)])] = i;
    int next = n;
    for (int u = 0; u < total; ++u) {
        if (is_leaf_work[static_cast<std::size_t>(u)] >= 0) continue;
        const int r = find(u);
        if (new_id[static_cast<std::size_t>(r)] < 0) new_id[static_cast<std::size_t>(r)] = next++;
    }
    std::vector<TreeEdge> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) {
        const int a = is_leaf_work[static_cast<std::size_t>(e.u)] >= 0 ? new_id[static_cast<std::size_t>(e.u)] : new_id[static_cast<std::size_t>(find(e.u))];
        const int b = is_leaf_work[static_cast<std::size_t>(e.v)] >= 0 ? new_id[static_cast<std::size_t>(e.v)] : new_id[static_cast<std::size_t>(find(e.v))];
        edges.push_back({a, b, e.w});
    }
    WeightedTree tree(n, next, std::move(edges));
    if (tree.distances() != m) throw Error("realize_tree: realization does not reproduce the matrix");
    return tree;
}

WeightedTree embed_tree(const WeightedTree& tree, std::span<const int> indices, int n, const Rational& c)
{
    const int m = tree.num_leaves();
    if (static_cast<int>(indices.size()) != m || n < m) throw Error("embed_tree: bad index map");
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int idx : indices) {
        if (idx < 0 || idx >= n || used[static_cast<std::size_t>(idx)]) throw Error("embed_tree: indices must be distinct and in range");
        used[static_cast<std::size_t>(idx)] = 1;
    }
    if (tree.num_vertices() == m) throw Error("embed_tree: tree has no internal vertex");

    auto map_vertex = [&](int v) { return v < m ? indices[static_cast<std::size_t>(v)] : n + (v - m); };
    std::vector<TreeEdge> edges;
    for (const auto& e : tree.edges()) edges.push_back({map_vertex(e.u), map_vertex(e.v), e.weight});

    // Hang the new leaves off the first internal vertex.
    const int hub_old = m;
    const auto dist = tree.distances_from(hub_old);
    Rational nearest = dist[0];
    for (int leaf = 1; leaf < m; ++leaf) nearest = min(nearest, dist[static_cast<std::size_t>(leaf)]);
    const Rational pendant = max(c.half(), c - nearest);
    const int hub = map_vertex(hub_old);
    for (int leaf = 0; leaf < n; ++leaf)
        if (!used[static_cast<std::size_t>(leaf)]) edges.push_back({leaf, hub, pendant});
    return {n, n + (tree.num_vertices() - m), std::move(edges)};
}

DissimilarityMatrix extend_tree(const DissimilarityMatrix& m, int n, const Rational& c)
{
    if (n <= m.size()) throw Error("extend_tree: target dimension must exceed the block");
    std::vector<int> idx(static_cast<std::size_t>(m.size()));
    std::iota(idx.begin(), idx.end(), 0);
    return embed_tree(realize_tree(m), idx, n, c).distances();
}

}  // namespace troprank
