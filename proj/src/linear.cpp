#include "troprank/linear.hpp"

#include "troprank/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace troprank {

namespace {

struct Row {
    std::vector<Rational> a;
    Rational b;
};

bool is_zero(const std::vector<Rational>& a)
{
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.sign() == 0; });
}

// Scales so the first nonzero coefficient has absolute value 1 (direction kept).
void normalize(Row& r)
{
    for (const auto& x : r.a)
        if (x.sign() != 0) {
            const Rational s = x.abs();
            for (auto& y : r.a) y /= s;
            r.b /= s;
            return;
        }
}

// Keeps one row per coefficient vector, with the tightest right-hand side.
// Returns false if some coefficient-free row is violated.
bool dedup(std::vector<Row>& rows)
{
    std::map<std::vector<Rational>, Rational> best;
    for (auto& r : rows) {
        if (is_zero(r.a)) {
            if (r.b.sign() < 0) return false;
            continue;
        }
        normalize(r);
        auto [it, fresh] = best.emplace(r.a, r.b);
        if (!fresh && r.b < it->second) it->second = r.b;
    }
    rows.clear();
    for (auto& [a, b] : best) rows.push_back({a, b});
    return true;
}

}  // namespace

std::optional<std::vector<Rational>> solve_feasibility(int num_vars, const std::vector<LinearConstraint>& constraints,
                                                       const FeasibilityLimits& limits)
{
    const auto nv = static_cast<std::size_t>(num_vars);
    std::vector<Row> eqs;
    std::vector<Row> ineqs;
    for (const auto& c : constraints) {
        if (c.coeffs.size() != nv) throw Error("constraint width does not match the variable count");
        switch (c.rel) {
        case Relation::Equal: eqs.push_back({c.coeffs, c.rhs}); break;
        case Relation::LessEqual: ineqs.push_back({c.coeffs, c.rhs}); break;
        case Relation::GreaterEqual: {
            Row r{c.coeffs, -c.rhs};
            for (auto& x : r.a) x = -x;
            ineqs.push_back(std::move(r));
            break;
        }
        }
    }

    // Gaussian elimination of equalities: pivots[k] solves eq k for its variable.
    std::vector<std::pair<int, Row>> pivots;
    auto substitute = [](Row& r, int p, const Row& piv) {
        const Rational f = r.a[static_cast<std::size_t>(p)] / piv.a[static_cast<std::size_t>(p)];
        if (f.sign() == 0) return;
        for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] -= f * piv.a[k];
        r.b -= f * piv.b;
    };
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        Row r = eqs[e];
        for (const auto& [p, piv] : pivots) substitute(r, p, piv);
        int p = -1;
        for (int k = 0; k < num_vars; ++k)
            if (r.a[static_cast<std::size_t>(k)].sign() != 0) {
                p = k;
                break;
            }
        if (p < 0) {
            if (r.b.sign() != 0) return std::nullopt;
            continue;
        }
        for (auto& [q, prev] : pivots) substitute(prev, p, r);
        pivots.emplace_back(p, std::move(r));
    }
    for (auto& r : ineqs)
        for (const auto& [p, piv] : pivots) substitute(r, p, piv);

    // Fourier-Motzkin.
    std::vector<std::vector<Row>> stages;
    std::vector<int> eliminated;
    std::vector<Row> current = std::move(ineqs);
    if (!dedup(current)) return std::nullopt;
    while (!current.empty()) {
        int pick = -1;
        long long pick_cost = 0;
        for (int k = 0; k < num_vars; ++k) {
            long long pos = 0;
            long long neg = 0;
            for (const auto& r : current) {
                const int s = r.a[static_cast<std::size_t>(k)].sign();
                pos += s > 0;
                neg += s < 0;
            }
            if (pos + neg == 0) continue;
            const long long cost = pos * neg - pos - neg;
            if (pick < 0 || cost < pick_cost) {
                pick = k;
                pick_cost = cost;
            }
        }
        if (pick < 0) break;
        const auto x = static_cast<std::size_t>(pick);
        std::vector<Row> next;
        std::vector<const Row*> upper;
        std::vector<const Row*> lower;
        for (const auto& r : current) {
            const int s = r.a[x].sign();
            if (s == 0) next.push_back(r);
            else if (s > 0) upper.push_back(&r);
            else lower.push_back(&r);
        }
        for (const Row* u : upper)
            for (const Row* l : lower) {
                const Rational su = -l->a[x];
                const Rational sl = u->a[x];
                Row r{std::vector<Rational>(nv), u->b * su + l->b * sl};
                for (std::size_t k = 0; k < nv; ++k) r.a[k] = u->a[k] * su + l->a[k] * sl;
                r.a[x] = 0;
                next.push_back(std::move(r));
            }
        if (!dedup(next)) return std::nullopt;
        if (next.size() > limits.max_constraints) throw Error("Fourier-Motzkin elimination exceeded its constraint limit");
        stages.push_back(std::move(current));
        eliminated.push_back(pick);
        current = std::move(next);
    }

    std::vector<Rational> value(nv, Rational(0));
    for (std::size_t s = stages.size(); s-- > 0;) {
        const auto x = static_cast<std::size_t>(eliminated[s]);
        std::optional<Rational> lo;
        std::optional<Rational> hi;
        for (const auto& r : stages[s]) {
            const Rational& ax = r.a[x];
            if (ax.sign() == 0) continue;
            Rational rest = r.b;
            for (std::size_t k = 0; k < nv; ++k)
                if (k != x) rest -= r.a[k] * value[k];
            const Rational bound = rest / ax;
            if (ax.sign() > 0) hi = hi ? min(*hi, bound) : bound;
            else lo = lo ? max(*lo, bound) : bound;
        }
        if (lo && hi && *hi < *lo) throw Error("Fourier-Motzkin back-substitution found an empty interval");
        Rational v = 0;
        if (lo && *lo > v) v = *lo;
        if (hi && *hi < v) v = *hi;
        value[x] = v;
    }
    for (std::size_t e = pivots.size(); e-- > 0;) {
        const auto& [p, r] = pivots[e];
        const auto px = static_cast<std::size_t>(p);
        Rational rest = r.b;
        for (std::size_t k = 0; k < nv; ++k)
            if (k != px) rest -= r.a[k] * value[k];
        value[px] = rest / r.a[px];
    }
    return value;
}

int matrix_rank(const std::vector<std::vector<Rational>>& rows)
{
    using boost::multiprecision::cpp_int;
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<cpp_int>> a;
    for (const auto& row : rows) {
        if (row.size() != cols) throw Error("ragged matrix");
        std::int64_t l = 1;
        for (const auto& x : row) l = std::lcm(l, x.den());
        std::vector<cpp_int> out;
        for (const auto& x : row) out.push_back(cpp_int(x.num()) * (l / x.den()));
        a.push_back(std::move(out));
    }
    const std::size_t m = a.size();
    cpp_int prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m; ++c) {
        std::size_t piv = rank;
        while (piv < m && a[piv][c] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace troprank
