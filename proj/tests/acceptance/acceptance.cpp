// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include "troprank/classify.hpp"
#include "troprank/covers.hpp"
#include "troprank/generators.hpp"
#include "troprank/rank_engine.hpp"
#include "troprank/secant_dim.hpp"
#include "troprank/small_cases.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace troprank;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            if (ok) why << what;
            else why << "; " << what;
            ok = false;
        }
    }
};

bool run(int id, const char* title, const std::function<std::string(Check&)>& body)
{
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
        detail = body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %d %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, secs, detail.empty() ? "" : ": ", detail.c_str());
    if (!c.ok) std::printf("     %s\n", c.why.str().c_str());
    std::fflush(stdout);
    return c.ok;
}

int value_of(const RankResult& r) { return r.determined() && !r.infinite ? r.upper : -1; }

std::string s(int x) { return std::to_string(x); }

// Finite-rank symmetric matrix: off-diagonal entries in [lo, hi], each
// diagonal entry at most the smallest entry of its row.
SymmetricMatrix random_finite_symmetric(int n, int lo, int hi, std::uint64_t seed)
{
    auto m = random_symmetric(n, lo, hi, seed);
    std::mt19937_64 rng(seed ^ 0x5bd1e995);
    std::uniform_int_distribution<int> drop(0, 2);
    for (int i = 0; i < n; ++i) {
        Rational low = hi;
        for (int j = 0; j < n; ++j)
            if (j != i) low = std::min(low, m(i, j));
        m.set(i, i, low - drop(rng));
    }
    return m;
}

std::string criterion_worked_values(Check& c)
{
    {
        const auto m = intro_example();
        const auto p = project(m);
        c.expect(value_of(exact_rank(m)) == 4, "intro sym rank != 4");
        const auto star = exact_rank(p, Notion::StarTree);
        c.expect(value_of(star) == 2 && star.decomposition && star.decomposition->size() == 2 && verify(p, *star.decomposition).ok,
                 "intro star rank != 2 with verified 2-term decomposition");
        const auto tree = exact_rank(p, Notion::Tree);
        c.expect(value_of(tree) == 1, "intro tree rank != 1");
        const auto t = realize_tree(p);
        c.expect(t.distances() == p && !t.to_newick().empty(), "intro tree realization");
    }
    for (int n = 3; n <= 7; ++n) {
        const auto m = min_matrix(n);
        c.expect(is_tree_matrix(m), "min matrix n=" + s(n) + " not a tree matrix");
        if (n <= 6) {
            c.expect(value_of(exact_rank(m, Notion::StarTree)) == n - 2, "min matrix n=" + s(n) + " exact star rank");
        } else {
            const auto chi = chromatic_number(build_deficiency(m, Basis::StarTree));
            const auto d = star_upper_decomposition(m);
            c.expect(chi.lower == n - 2 && d.size() == n - 2 && verify(m, d).ok, "min matrix n=7 chromatic bound + construction");
        }
    }
    for (int n = 4; n <= 6; ++n) {
        const auto m = bipartite_pattern(n);
        c.expect(value_of(auto_rank(AnyMatrix(m), Notion::SymmetricBarvinok)) == n * n / 4, "bipartite n=" + s(n));
        if (n <= 5) c.expect(value_of(exact_rank(m)) == n * n / 4, "bipartite n=" + s(n) + " exact search");
    }
    for (int n = 3; n <= 6; ++n) {
        const auto m = identity_pattern(n);
        c.expect(value_of(auto_rank(AnyMatrix(m), Notion::SymmetricBarvinok)) == n, "identity pattern n=" + s(n));
        if (n <= 5) c.expect(value_of(exact_rank(m)) == n, "identity pattern n=" + s(n) + " exact search");
    }
    {
        const auto m = singular_minors_matrix();
        c.expect(value_of(exact_rank(m)) == 4, "4x4 singular-minors matrix rank != 4");
        for (int skip = 0; skip < 4; ++skip) {
            std::vector<int> idx;
            for (int i = 0; i < 4; ++i)
                if (i != skip) idx.push_back(i);
            c.expect(is_tropically_singular_3x3(m.principal(idx)), "3x3 principal submatrix not singular");
        }
    }
    {
        const auto m = cycle_matrix(5);
        c.expect(value_of(exact_rank(m, Notion::StarTree)) == 3, "C5 star rank != 3");
        c.expect(value_of(exact_rank(m, Notion::Tree)) == 3, "C5 tree rank != 3");
        const auto h = build_deficiency(m, Basis::Pluecker);
        const auto g = h.graph();
        bool cycle = h.hyperedges.size() == 5 && g.components().size() == 6;
        for (int v = 0; v < g.size(); ++v) cycle = cycle && (g.degree(v) == 0 || g.degree(v) == 2);
        c.expect(cycle && chromatic_number(h).lower == 3, "C5 deficiency is not a 5-cycle with chi 3");
    }
    int chi6 = 0;
    {
        const auto m = tree_rank_six_matrix();
        const auto chi = chromatic_number(build_deficiency(m, Basis::Pluecker));
        chi6 = chi.lower;
        const auto d = tree_upper_decomposition(m);
        c.expect(chi.exact && chi.lower == 6, "9x9 chi != 6");
        c.expect(d.size() == 6 && verify(m, d).ok, "9x9 construction size != 6");
    }
    int chi12 = 0;
    {
        const auto chi = chromatic_number(build_deficiency(block_matrix_mk(2), Basis::Pluecker));
        chi12 = chi.lower;
        c.expect(chi.lower >= 12, "M2 chi < 12");
    }
    return "chi(9x9) = " + s(chi6) + ", chi(M2) >= " + s(chi12);
}

struct OracleRun {
    int star_mismatch = 0;
    int tree_mismatch = 0;
    int sym_mismatch = 0;
    int undetermined = 0;
    int chi_violations = 0;
    int chi_equal = 0;
    int instances = 0;
};

OracleRun oracle_run()
{
    OracleRun out;
    std::vector<DissimilarityMatrix> ds;
    for (std::uint64_t k = 0; k < 1000; ++k) ds.push_back(random_dissimilarity(5, 0, 9, 10'000 + k));
    std::vector<SymmetricMatrix> ss;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        ss.push_back(random_finite_symmetric(3, -3, 6, 20'000 + k));
        ss.push_back(random_symmetric(3, -3, 6, 25'000 + k));
    }

    // Searches start at r = 1 so the ranks do not lean on the chromatic bound being compared.
    RankOptions opt;
    opt.use_chromatic_bound = false;
    const auto star = exact_rank_batch(ds, Notion::StarTree, Execution::Parallel, opt);
    const auto tree = exact_rank_batch(ds, Notion::Tree, Execution::Parallel, opt);
    const auto sym = exact_rank_batch(ss, Execution::Parallel, opt);

    auto tally = [&](const RankResult& r) {
        if (r.infinite) return;
        ++out.instances;
        if (!r.determined()) ++out.undetermined;
        if (r.chromatic > r.upper) ++out.chi_violations;
        if (r.chromatic_exact && r.chromatic == r.upper) ++out.chi_equal;
    };
    for (std::size_t k = 0; k < ds.size(); ++k) {
        if (star5_rank2_test(ds[k]).rank_at_most_two != (star[k].upper <= 2) || !star[k].determined()) ++out.star_mismatch;
        if (tree5_rank(ds[k]).rank != value_of(tree[k])) ++out.tree_mismatch;
        tally(star[k]);
        tally(tree[k]);
    }
    for (std::size_t k = 0; k < ss.size(); ++k) {
        if (sym3_rank(ss[k]).rank != sym[k].value()) ++out.sym_mismatch;
        tally(sym[k]);
    }
    return out;
}

std::string criterion_chain(Check& c)
{
    int checked = 0;
    int violations = 0;
    for (int n : {4, 5}) {
        std::vector<SymmetricMatrix> ms;
        std::vector<DissimilarityMatrix> ps;
        for (std::uint64_t k = 0; k < 250; ++k) {
            ms.push_back(random_finite_symmetric(n, 0, 4, 30'000 + 1000 * static_cast<std::uint64_t>(n) + k));
            ps.push_back(project(ms.back()));
        }
        const auto sym = exact_rank_batch(ms, Execution::Parallel);
        const auto star = exact_rank_batch(ps, Notion::StarTree, Execution::Parallel);
        const auto tree = exact_rank_batch(ps, Notion::Tree, Execution::Parallel);
        for (std::size_t k = 0; k < ms.size(); ++k) {
            c.expect(sym[k].determined() && star[k].determined() && tree[k].determined(), "undetermined rank in chain run");
            ++checked;
            // Lower bounds already certify the chain when a search is cut short.
            if (sym[k].upper < star[k].lower || star[k].upper < tree[k].lower) ++violations;
        }
    }
    c.expect(violations == 0, s(violations) + " chain violations");
    return s(checked) + " matrices, " + s(violations) + " violations";
}

std::string criterion_constructions(Check& c)
{
    int runs = 0;
    for (int n = 3; n <= 7; ++n)
        for (std::uint64_t k = 0; k < 100; ++k) {
            const std::uint64_t seed = 40'000 + 1000 * static_cast<std::uint64_t>(n) + k;
            const auto sm = random_finite_symmetric(n, -9, 9, seed);
            const auto ds = symmetric_upper_decomposition(sm);
            c.expect(verify(sm, ds).ok && ds.size() <= upper_bound_size(Notion::SymmetricBarvinok, n), "sym construction n=" + s(n));
            const auto dm = random_dissimilarity(n, -9, 9, seed);
            const auto dst = star_upper_decomposition(dm);
            c.expect(verify(dm, dst).ok && dst.size() <= upper_bound_size(Notion::StarTree, n), "star construction n=" + s(n));
            const auto dt = tree_upper_decomposition(dm);
            c.expect(verify(dm, dt).ok && dt.size() <= upper_bound_size(Notion::Tree, n), "tree construction n=" + s(n));
            if (n == 6) c.expect(dt.size() == 3, "n=6 tree construction size != 3");
            runs += 3;
        }
    return s(runs) + " constructions verified";
}

std::string criterion_dimensions(Check& c)
{
    int cells = 0;
    int mismatches = 0;
    for (Notion notion : {Notion::SymmetricBarvinok, Notion::StarTree, Notion::Tree}) {
        for (const auto& r : dimension_grid(notion, 3, 7, 10, 2024, Execution::Parallel)) {
            ++cells;
            if (!r.matches()) {
                ++mismatches;
                c.expect(false, to_string(notion) + " n=" + s(r.n) + " r=" + s(r.r) + ": formula " + s(r.formula_value) + ", sampled " +
                                    s(r.sampled_value));
            }
        }
    }
    return s(cells) + " (notion, n, r) cells, " + s(mismatches) + " mismatches";
}

std::string criterion_infinite(Check& c)
{
    std::mt19937_64 rng(777);
    int infinite = 0;
    int finite = 0;
    for (std::uint64_t k = 0; k < 100; ++k) {
        const int n = 2 + static_cast<int>(k % 4);
        auto m = random_finite_symmetric(n, -5, 5, 50'000 + k);
        // Push one diagonal pair past its off-diagonal entry.
        std::uniform_int_distribution<int> pick(0, n - 1);
        const int i = pick(rng);
        int j = pick(rng);
        if (j == i) j = (i + 1) % n;
        m.set(i, i, m(i, j) + 1);
        m.set(j, j, m(i, j));
        const auto w = infinite_rank_witness(m);
        const auto r = exact_rank(m);
        const bool pinpointed = w && 2 * m(w->i, w->j) < m(w->i, w->i) + m(w->j, w->j) && r.infinite_witness == w;
        c.expect(r.infinite && pinpointed, "violating matrix not reported infinite with its pair");
        infinite += r.infinite && pinpointed;
    }
    for (std::uint64_t k = 0; k < 100; ++k) {
        const int n = 2 + static_cast<int>(k % 4);
        const auto m = random_finite_symmetric(n, -5, 5, 60'000 + k);
        const auto r = auto_rank(AnyMatrix(m), Notion::SymmetricBarvinok);
        const bool ok = !r.infinite && r.decomposition && verify(m, *r.decomposition).ok;
        c.expect(ok, "finite matrix without verified decomposition");
        finite += ok;
    }
    return s(infinite) + "/100 infinite pinpointed, " + s(finite) + "/100 finite verified";
}

std::string criterion_petersen(Check& c)
{
    int counts[6] = {0, 0, 0, 0, 0, 0};
    int alternating = 0;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const auto m = random_dissimilarity(5, 0, 9, 70'000 + k);
        const auto cl = classify_petersen(m);
        ++counts[static_cast<int>(cl.kind)];
        c.expect(cl.edges.size() <= 5, "more than 5 deficiency edges");
        c.expect(cl.kind != PetersenClass::Other, "shape outside the taxonomy");
        if (has_alternating_even_cycle(cl.edges)) ++alternating;
        c.expect((cl.kind == PetersenClass::FiveCycle) == (tree5_rank(m).rank == 3), "five-cycle shape without tree rank 3");
    }
    c.expect(alternating == 0, s(alternating) + " alternating even cycles");
    std::string d;
    for (auto kind : {PetersenClass::Trivial, PetersenClass::FewerThan5Edges, PetersenClass::Figure3TypeA, PetersenClass::Figure3TypeB,
                      PetersenClass::FiveCycle})
        d += (d.empty() ? "" : ", ") + to_string(kind) + " " + s(counts[static_cast<int>(kind)]);
    return d;
}

}  // namespace

int main()
{
    bool ok = true;
    ok = run(1, "worked-example regression table", criterion_worked_values) && ok;

    const auto t0 = std::chrono::steady_clock::now();
    const OracleRun oracle = oracle_run();
    const double oracle_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = run(2, "oracle equivalence on 1000 5x5 and 2000 3x3 matrices",
             [&](Check& c) {
                 c.expect(oracle.star_mismatch == 0, s(oracle.star_mismatch) + " pentad mismatches");
                 c.expect(oracle.tree_mismatch == 0, s(oracle.tree_mismatch) + " tree5 mismatches");
                 c.expect(oracle.sym_mismatch == 0, s(oracle.sym_mismatch) + " sym3 mismatches");
                 c.expect(oracle.undetermined == 0, s(oracle.undetermined) + " undetermined searches");
                 char buf[64];
                 std::snprintf(buf, sizeof buf, "searches took %.2f s", oracle_secs);
                 return std::string(buf) + ", 0 discrepancies expected, found " +
                        s(oracle.star_mismatch + oracle.tree_mismatch + oracle.sym_mismatch);
             }) &&
         ok;
    ok = run(3, "rank chain sym >= star >= tree", criterion_chain) && ok;
    ok = run(4, "construction soundness and size bounds", criterion_constructions) && ok;
    ok = run(5, "chromatic lower bound soundness",
             [&](Check& c) {
                 c.expect(oracle.chi_violations == 0, s(oracle.chi_violations) + " instances with chi > rank");
                 char buf[128];
                 std::snprintf(buf, sizeof buf, "chi = rank on %d/%d instances (%.1f%%)", oracle.chi_equal, oracle.instances,
                               100.0 * oracle.chi_equal / std::max(1, oracle.instances));
                 return std::string(buf);
             }) &&
         ok;
    ok = run(6, "secant dimensions", criterion_dimensions) && ok;
    ok = run(7, "infinite rank detection", criterion_infinite) && ok;
    ok = run(8, "5x5 deficiency classification", criterion_petersen) && ok;
    return ok ? 0 : 1;
}
