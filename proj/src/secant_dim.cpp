#include "troprank/secant_dim.hpp"

#include "troprank/linear.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace troprank {

long long choose2(long long k) { return k < 2 ? 0 : k * (k - 1) / 2; }

int ambient_dimension(Notion notion, int n)
{
    return static_cast<int>(notion == Notion::SymmetricBarvinok ? choose2(n + 1) : choose2(n));
}

int dimension_formula(Notion notion, int n, int r)
{
    if (r < 1 || n < 1) throw Error("dimension needs n >= 1 and r >= 1");
    if (notion != Notion::SymmetricBarvinok && n < 3) throw Error("dissimilarity dimensions need n >= 3");
    switch (notion) {
    case Notion::SymmetricBarvinok: return static_cast<int>(choose2(n + 1) - choose2(n - r + 1));
    case Notion::StarTree: return static_cast<int>(std::min(choose2(n + 1) - choose2(n - r + 1), choose2(n)));
    case Notion::Tree: return static_cast<int>(2 * r <= n ? choose2(n) - choose2(n - 2 * r) : choose2(n));
    }
    return 0;
}

namespace {

// constant + sum of coeff * theta[param]
struct Affine {
    Rational constant;
    std::vector<std::pair<int, Rational>> terms;
};

// One summand of a parametrized tropical sum: an affine form per position
// (symmetric positions include the diagonal), nullopt meaning the padding constant.
using ParamSummand = std::vector<std::optional<Affine>>;

struct Parametrization {
    int n = 0;
    bool diagonal = false;
    std::vector<Rational> theta;
    Rational pad;
    std::vector<ParamSummand> summands;

    [[nodiscard]] int num_positions() const { return diagonal ? n * (n + 1) / 2 : n * (n - 1) / 2; }
    [[nodiscard]] int position(int i, int j) const
    {
        if (i > j) std::swap(i, j);
        return diagonal ? i * n - i * (i - 1) / 2 + (j - i) : i * n - i * (i + 1) / 2 + (j - i - 1);
    }
    int add_param(Rational value)
    {
        theta.push_back(value);
        return static_cast<int>(theta.size()) - 1;
    }
    ParamSummand empty_summand() const { return ParamSummand(static_cast<std::size_t>(num_positions())); }
};

Rational eval(const Parametrization& p, const std::optional<Affine>& a, const std::vector<Rational>& theta)
{
    if (!a) return p.pad;
    Rational v = a->constant;
    for (const auto& [k, c] : a->terms) v += c * theta[static_cast<std::size_t>(k)];
    return v;
}

// Unique winner per position, or nullopt on a tie.
std::optional<std::vector<int>> argmins(const Parametrization& p, const std::vector<Rational>& theta)
{
    std::vector<int> out(static_cast<std::size_t>(p.num_positions()));
    for (int pos = 0; pos < p.num_positions(); ++pos) {
        int best = -1;
        Rational bv;
        bool tie = false;
        for (int s = 0; s < static_cast<int>(p.summands.size()); ++s) {
            const Rational v = eval(p, p.summands[static_cast<std::size_t>(s)][static_cast<std::size_t>(pos)], theta);
            if (best < 0 || v < bv) {
                best = s;
                bv = v;
                tie = false;
            } else if (v == bv) {
                tie = true;
            }
        }
        if (tie) return std::nullopt;
        out[static_cast<std::size_t>(pos)] = best;
    }
    return out;
}

// Rank of the local affine map, or nullopt if the point is not generic.
std::optional<int> local_rank(const Parametrization& p)
{
    const auto pattern = argmins(p, p.theta);
    if (!pattern) return std::nullopt;
    const Rational eps(1, 1000);
    for (std::size_t k = 0; k < p.theta.size(); ++k)
        for (const Rational& d : {eps, -eps}) {
            auto moved = p.theta;
            moved[k] += d;
            const auto other = argmins(p, moved);
            if (!other || *other != *pattern) return std::nullopt;
        }
    std::vector<std::vector<Rational>> rows;
    for (int pos = 0; pos < p.num_positions(); ++pos) {
        std::vector<Rational> row(p.theta.size());
        const auto& a = p.summands[static_cast<std::size_t>((*pattern)[static_cast<std::size_t>(pos)])][static_cast<std::size_t>(pos)];
        if (a)
            for (const auto& [k, c] : a->terms) row[static_cast<std::size_t>(k)] += c;
        rows.push_back(std::move(row));
    }
    return matrix_rank(rows);
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    // Uniform on (lo, hi) in steps of 1/1000.
    Rational uniform(int lo, int hi)
    {
        std::uniform_int_distribution<long long> d(static_cast<long long>(lo) * 1000 + 1, static_cast<long long>(hi) * 1000 - 1);
        return Rational(d(rng_), 1000);
    }

private:
    std::mt19937_64 rng_;
};

Affine var_sum(int a, int b)
{
    Affine f;
    if (a == b) f.terms.emplace_back(a, Rational(2));
    else f.terms = {{a, Rational(1)}, {b, Rational(1)}};
    return f;
}

// Generators with C before the diagonal index and levels that decrease with k.
Parametrization symmetric_construction(int n, int r, Sampler& s)
{
    Parametrization p;
    p.n = n;
    p.diagonal = true;
    p.pad = Rational(1'000'000);
    const int rr = std::min(r, n);
    for (int k = 0; k < rr; ++k) {
        std::vector<int> var(static_cast<std::size_t>(n), -1);
        for (int i = k; i < n; ++i) var[static_cast<std::size_t>(i)] = p.add_param(Rational(1000 * (rr - k)) + s.uniform(0, 100));
        ParamSummand m = p.empty_summand();
        for (int i = k; i < n; ++i)
            for (int j = i; j < n; ++j) m[static_cast<std::size_t>(p.position(i, j))] = var_sum(var[static_cast<std::size_t>(i)], var[static_cast<std::size_t>(j)]);
        p.summands.push_back(std::move(m));
    }
    return p;
}

// The ordered-pair scheme: for k <= r the k-th pair of S = {(i, j) : r < i < j}
// is cheap in the k-th generator; leading entries grow level by level.
Parametrization star_construction(int n, int r, Sampler& s)
{
    Parametrization p;
    p.n = n;
    p.pad = Rational(1'000'000);
    const int rr = std::min(r, n);
    std::vector<std::pair<int, int>> pairs;
    for (int i = rr; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    for (int k = 0; k < rr; ++k) {
        std::vector<int> var(static_cast<std::size_t>(n), -1);
        for (int i = k; i < n; ++i) {
            Rational value;
            if (i < rr) {
                value = Rational(1000 * (rr - k)) + s.uniform(0, 100);
            } else {
                const bool in_pair = k < static_cast<int>(pairs.size()) && (pairs[static_cast<std::size_t>(k)].first == i || pairs[static_cast<std::size_t>(k)].second == i);
                value = in_pair ? s.uniform(0, 1) : s.uniform(2, 5);
            }
            var[static_cast<std::size_t>(i)] = p.add_param(value);
        }
        ParamSummand m = p.empty_summand();
        for (int i = k; i < n; ++i)
            for (int j = i + 1; j < n; ++j) m[static_cast<std::size_t>(p.position(i, j))] = var_sum(var[static_cast<std::size_t>(i)], var[static_cast<std::size_t>(j)]);
        p.summands.push_back(std::move(m));
    }
    return p;
}

// Caterpillars peeled two leaves at a time. Each level's pendant weights sit
// above the next level's scale so the deeper block shows through the sum.
Parametrization tree_construction(int n, int r, Sampler& s)
{
    Parametrization p;
    p.n = n;
    p.pad = Rational(10'000'000);
    const int rr = std::max(1, std::min(r, n / 2));
    for (int level = 0; level < rr; ++level) {
        const int first = 2 * level;
        std::vector<int> leaves{first};  // caterpillar order: a1, a3, ..., am, a2
        for (int i = first + 2; i < n; ++i) leaves.push_back(i);
        leaves.push_back(first + 1);
        const int m = static_cast<int>(leaves.size());
        const Rational big(1000 * (rr - level));
        std::vector<int> pendant(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
            const bool end = k == 0 || k == m - 1;
            pendant[static_cast<std::size_t>(k)] = p.add_param(end ? s.uniform(0, 10) : big + s.uniform(0, 10));
        }
        // internal[k] joins the attachment points of positions k and k+1 (k = 1..m-3).
        std::vector<int> internal(static_cast<std::size_t>(std::max(0, m)), -1);
        for (int k = 1; k + 2 < m; ++k) internal[static_cast<std::size_t>(k)] = p.add_param(-s.uniform(0, 10));
        auto attach = [&](int k) { return std::clamp(k, 1, std::max(1, m - 2)); };
        ParamSummand sm = p.empty_summand();
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                Affine f;
                f.terms = {{pendant[static_cast<std::size_t>(a)], Rational(1)}, {pendant[static_cast<std::size_t>(b)], Rational(1)}};
                for (int k = attach(a); k < attach(b); ++k) f.terms.emplace_back(internal[static_cast<std::size_t>(k)], Rational(1));
                sm[static_cast<std::size_t>(p.position(leaves[static_cast<std::size_t>(a)], leaves[static_cast<std::size_t>(b)]))] = f;
            }
        p.summands.push_back(std::move(sm));
    }
    return p;
}

Parametrization construction(Notion notion, int n, int r, Sampler& s)
{
    switch (notion) {
    case Notion::SymmetricBarvinok: return symmetric_construction(n, r, s);
    case Notion::StarTree: return star_construction(n, r, s);
    case Notion::Tree: return tree_construction(n, r, s);
    }
    throw Error("unknown notion");
}

}  // namespace

DimensionReport sampled_local_dimension(Notion notion, int n, int r, int trials, std::uint64_t seed, Execution exec)
{
    DimensionReport rep;
    rep.notion = notion;
    rep.n = n;
    rep.r = r;
    rep.formula_value = dimension_formula(notion, n, r);
    rep.ambient = ambient_dimension(notion, n);
    rep.trials = trials;
    rep.seed = seed;
    if (trials < 1) throw Error("at least one trial is needed");

    std::vector<int> ranks(static_cast<std::size_t>(trials), -1);
    std::vector<int> params(static_cast<std::size_t>(trials), 0);
    auto run = [&](int t) {
        Sampler s(seed + static_cast<std::uint64_t>(t) * 0x9e3779b97f4a7c15ULL);
        const auto p = construction(notion, n, r, s);
        params[static_cast<std::size_t>(t)] = static_cast<int>(p.theta.size());
        if (auto k = local_rank(p)) ranks[static_cast<std::size_t>(t)] = *k;
    };
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < trials; ++t) run(t);
    } else {
        for (int t = 0; t < trials; ++t) run(t);
    }
    rep.parameters = params.front();
    for (int k : ranks) {
        if (k >= 0) ++rep.stable_trials;
        rep.sampled_value = std::max(rep.sampled_value, k);
    }
    return rep;
}

std::vector<DimensionReport> dimension_grid(Notion notion, int n_min, int n_max, int trials, std::uint64_t seed, Execution exec)
{
    std::vector<DimensionReport> out;
    for (int n = n_min; n <= n_max; ++n) {
        const int r_max = notion == Notion::Tree ? n / 2 + 1 : n;
        for (int r = 1; r <= r_max; ++r) out.push_back(sampled_local_dimension(notion, n, r, trials, seed, exec));
    }
    return out;
}

}  // namespace troprank
