#include "troprank/graph.hpp"

#include "troprank/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace troprank {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0), nbrs_(static_cast<std::size_t>(n))
{
    if (n < 0) throw Error("graph size must be nonnegative");
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("graph edge endpoint out of range");
    if (u == v) throw Error("simple graph cannot hold a loop");
    auto& cell = adj_[static_cast<std::size_t>(u * n_ + v)];
    if (cell) return;
    cell = 1;
    adj_[static_cast<std::size_t>(v * n_ + u)] = 1;
    nbrs_[static_cast<std::size_t>(u)].push_back(v);
    nbrs_[static_cast<std::size_t>(v)].push_back(u);
    ++num_edges_;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const int> vertices) const
{
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (adjacent(vertices[a], vertices[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

Graph Graph::complement() const
{
    Graph h(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) h.add_edge(u, v);
    return h;
}

std::vector<std::vector<int>> Graph::components() const
{
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            out.back().push_back(u);
            for (int w : neighbors(u))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_proper_coloring(const Graph& g, std::span<const int> colors)
{
    if (static_cast<int>(colors.size()) != g.size()) return false;
    for (const auto& [u, v] : g.edges())
        if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
    return true;
}

namespace {

// Maximum clique: branch and bound with greedy-coloring bounds (Tomita style).
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::vector<int> run(int stop_at)
    {
        stop_at_ = stop_at;
        std::vector<int> order(static_cast<std::size_t>(g_.size()));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        std::vector<int> current;
        expand(current, order);
        return best_;
    }

private:
    void expand(std::vector<int>& current, const std::vector<int>& candidates)
    {
        if (done()) return;
        // Greedy color candidates; color count bounds the clique they can add.
        std::vector<int> order;
        std::vector<int> bound;
        std::vector<std::vector<int>> classes;
        for (int v : candidates) {
            std::size_t k = 0;
            for (; k < classes.size(); ++k) {
                bool ok = true;
                for (int w : classes[k])
                    if (g_.adjacent(v, w)) {
                        ok = false;
                        break;
                    }
                if (ok) break;
            }
            if (k == classes.size()) classes.emplace_back();
            classes[k].push_back(v);
        }
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (int v : classes[k]) {
                order.push_back(v);
                bound.push_back(static_cast<int>(k) + 1);
            }
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (current.size() + static_cast<std::size_t>(bound[static_cast<std::size_t>(idx)]) <= best_.size()) return;
            const int v = order[static_cast<std::size_t>(idx)];
            current.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < idx; ++j)
                if (g_.adjacent(v, order[static_cast<std::size_t>(j)])) next.push_back(order[static_cast<std::size_t>(j)]);
            if (next.empty()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
            if (done()) return;
        }
    }

    [[nodiscard]] bool done() const { return stop_at_ > 0 && static_cast<int>(best_.size()) >= stop_at_; }

    const Graph& g_;
    std::vector<int> best_;
    int stop_at_ = 0;
};

// DSATUR branch and bound on a graph that is connected with a connected complement.
class DsaturSearch {
public:
    DsaturSearch(const Graph& g, std::uint64_t max_nodes) : g_(g), n_(g.size()), max_nodes_(max_nodes) {}

    ColoringResult run()
    {
        ColoringResult res;
        const auto clique = maximum_clique(g_);
        lower_ = std::max<int>(1, static_cast<int>(clique.size()));

        best_ = greedy_dsatur();
        best_count_ = 1 + *std::max_element(best_.begin(), best_.end());
        if (best_count_ > lower_) {
            colors_.assign(static_cast<std::size_t>(n_), -1);
            stride_ = best_count_;
            counts_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(stride_), 0);
            saturation_.assign(static_cast<std::size_t>(n_), 0);
            // Precolor the clique: any optimal coloring can be relabeled to match.
            int used = 0;
            for (int v : clique) assign(v, used++);
            search(static_cast<int>(clique.size()), used);
            res.exact = !aborted_;
        } else {
            res.exact = true;
        }
        res.lower = res.exact ? best_count_ : lower_;
        res.upper = best_count_;
        res.colors = best_;
        res.nodes = nodes_;
        return res;
    }

private:
    std::vector<int> greedy_dsatur() const
    {
        std::vector<int> colors(static_cast<std::size_t>(n_), -1);
        std::vector<std::vector<char>> seen(static_cast<std::size_t>(n_), std::vector<char>(static_cast<std::size_t>(n_) + 1, 0));
        std::vector<int> sat(static_cast<std::size_t>(n_), 0);
        for (int step = 0; step < n_; ++step) {
            int pick = -1;
            for (int v = 0; v < n_; ++v) {
                if (colors[static_cast<std::size_t>(v)] >= 0) continue;
                if (pick < 0 || sat[static_cast<std::size_t>(v)] > sat[static_cast<std::size_t>(pick)] ||
                    (sat[static_cast<std::size_t>(v)] == sat[static_cast<std::size_t>(pick)] && g_.degree(v) > g_.degree(pick)))
                    pick = v;
            }
            int c = 0;
            while (seen[static_cast<std::size_t>(pick)][static_cast<std::size_t>(c)]) ++c;
            colors[static_cast<std::size_t>(pick)] = c;
            for (int w : g_.neighbors(pick)) {
                auto& s = seen[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)];
                if (!s) {
                    s = 1;
                    ++sat[static_cast<std::size_t>(w)];
                }
            }
        }
        return colors;
    }

    int& count(int v, int c) { return counts_[static_cast<std::size_t>(v) * static_cast<std::size_t>(stride_) + static_cast<std::size_t>(c)]; }

    void assign(int v, int c)
    {
        colors_[static_cast<std::size_t>(v)] = c;
        for (int w : g_.neighbors(v))
            if (count(w, c)++ == 0) ++saturation_[static_cast<std::size_t>(w)];
    }

    void unassign(int v)
    {
        const int c = colors_[static_cast<std::size_t>(v)];
        colors_[static_cast<std::size_t>(v)] = -1;
        for (int w : g_.neighbors(v))
            if (--count(w, c) == 0) --saturation_[static_cast<std::size_t>(w)];
    }

    void search(int colored, int used)
    {
        if (aborted_ || best_count_ == lower_) return;
        if (++nodes_ > max_nodes_) {
            aborted_ = true;
            return;
        }
        if (colored == n_) {
            best_ = colors_;
            best_count_ = used;
            return;
        }
        int pick = -1;
        int pick_sat = -1;
        int pick_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (colors_[static_cast<std::size_t>(v)] >= 0) continue;
            const int s = saturation_[static_cast<std::size_t>(v)];
            if (s < pick_sat) continue;
            int deg = 0;
            for (int w : g_.neighbors(v))
                if (colors_[static_cast<std::size_t>(w)] < 0) ++deg;
            if (s > pick_sat || deg > pick_deg) {
                pick = v;
                pick_sat = s;
                pick_deg = deg;
            }
        }
        for (int c = 0; c <= used && c < best_count_ - 1; ++c) {
            if (c < used && count(pick, c) > 0) continue;
            assign(pick, c);
            search(colored + 1, std::max(used, c + 1));
            unassign(pick);
            if (aborted_ || best_count_ == lower_) return;
        }
    }

    const Graph& g_;
    int n_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    int lower_ = 1;
    std::vector<int> best_;
    int best_count_ = 0;
    int stride_ = 0;
    std::vector<int> colors_;
    std::vector<int> counts_;
    std::vector<int> saturation_;
};

ColoringResult color_connected(const Graph& g, const ColoringLimits& limits);

ColoringResult color_cojoin(const Graph& g, const ColoringLimits& limits)
{
    // g connected; split along complement components (a join): colors add up.
    const auto parts = g.complement().components();
    if (parts.size() == 1) return DsaturSearch(g, limits.max_nodes).run();
    ColoringResult out;
    out.exact = true;
    out.colors.assign(static_cast<std::size_t>(g.size()), 0);
    for (const auto& part : parts) {
        const auto sub = color_connected(g.induced(part), limits);
        for (std::size_t k = 0; k < part.size(); ++k)
            out.colors[static_cast<std::size_t>(part[k])] = out.upper + sub.colors[k];
        out.lower += sub.lower;
        out.upper += sub.upper;
        out.exact = out.exact && sub.exact;
        out.nodes += sub.nodes;
    }
    return out;
}

ColoringResult color_connected(const Graph& g, const ColoringLimits& limits)
{
    if (g.size() == 1) return ColoringResult{1, 1, true, {0}, 0};
    const auto comps = g.components();
    if (comps.size() == 1) return color_cojoin(g, limits);
    ColoringResult out;
    out.exact = true;
    out.colors.assign(static_cast<std::size_t>(g.size()), 0);
    for (const auto& comp : comps) {
        const auto sub = comp.size() == 1 ? ColoringResult{1, 1, true, {0}, 0} : color_cojoin(g.induced(comp), limits);
        for (std::size_t k = 0; k < comp.size(); ++k) out.colors[static_cast<std::size_t>(comp[k])] = sub.colors[k];
        out.lower = std::max(out.lower, sub.lower);
        out.upper = std::max(out.upper, sub.upper);
        out.exact = out.exact && sub.exact;
        out.nodes += sub.nodes;
    }
    if (!out.exact && out.lower == out.upper) out.exact = true;
    return out;
}

}  // namespace

ColoringResult color_graph(const Graph& g, const ColoringLimits& limits)
{
    if (g.size() == 0) return ColoringResult{0, 0, true, {}, 0};
    auto res = color_connected(g, limits);
    if (res.lower == res.upper) res.exact = true;
    return res;
}

std::vector<int> maximum_clique(const Graph& g)
{
    auto c = CliqueSearch(g).run(0);
    std::sort(c.begin(), c.end());
    return c;
}

std::optional<std::vector<int>> find_clique(const Graph& g, int size)
{
    if (size <= 0) return std::vector<int>{};
    auto c = CliqueSearch(g).run(size);
    if (static_cast<int>(c.size()) < size) return std::nullopt;
    c.resize(static_cast<std::size_t>(size));
    std::sort(c.begin(), c.end());
    return c;
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x, std::vector<std::vector<int>>& out)
{
    if (p.empty() && x.empty()) {
        auto c = r;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
        return;
    }
    int pivot = -1;
    int pivot_hits = -1;
    for (const auto* set : {&p, &x})
        for (int u : *set) {
            int hits = 0;
            for (int v : p) hits += g.adjacent(u, v) ? 1 : 0;
            if (hits > pivot_hits) {
                pivot = u;
                pivot_hits = hits;
            }
        }
    std::vector<int> branch;
    for (int v : p)
        if (!g.adjacent(pivot, v)) branch.push_back(v);
    for (int v : branch) {
        std::vector<int> np;
        std::vector<int> nx;
        for (int w : p)
            if (g.adjacent(v, w)) np.push_back(w);
        for (int w : x)
            if (g.adjacent(v, w)) nx.push_back(w);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(np), std::move(nx), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g)
{
    std::vector<std::vector<int>> out;
    std::vector<int> r;
    std::vector<int> p(static_cast<std::size_t>(g.size()));
    std::iota(p.begin(), p.end(), 0);
    bron_kerbosch(g, r, std::move(p), {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace troprank
