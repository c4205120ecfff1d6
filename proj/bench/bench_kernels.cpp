// Serial vs OpenMP timings for the three parallel kernels. Each pair of runs
// must agree; a mismatch exits with status 1.
#include "troprank/generators.hpp"
#include "troprank/rank_engine.hpp"
#include "troprank/secant_dim.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

using namespace troprank;

namespace {

template <typename F>
double seconds(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool report(const char* name, double serial, double parallel, bool agree)
{
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, agree ? "agree" : "MISMATCH");
    return agree;
}

bool same_hypergraph(const DeficiencyHypergraph& a, const DeficiencyHypergraph& b)
{
    return a.hyperedges == b.hyperedges && a.sources == b.sources;
}

}  // namespace

int main(int argc, char** argv)
{
    const int scale = argc > 1 ? std::atoi(argv[1]) : 1;
    std::printf("threads: %d   scale: %d\n", omp_get_max_threads(), scale);
    bool ok = true;

    {
        // 10 x 10 dissimilarity matrix: 210 quadrics over 45 positions.
        const auto m = random_dissimilarity(10, 0, 20, 7);
        const auto sym = random_symmetric(9, 0, 20, 7);
        DeficiencyHypergraph a, b, c, d;
        const int reps = 200 * scale;
        const double ts = seconds([&] {
            for (int k = 0; k < reps; ++k) {
                a = build_deficiency(m, Basis::Pluecker, Execution::Serial);
                c = build_deficiency(sym, Basis::SymmetricMinors, Execution::Serial);
            }
        });
        const double tp = seconds([&] {
            for (int k = 0; k < reps; ++k) {
                b = build_deficiency(m, Basis::Pluecker, Execution::Parallel);
                d = build_deficiency(sym, Basis::SymmetricMinors, Execution::Parallel);
            }
        });
        ok = report("build_deficiency", ts, tp, same_hypergraph(a, b) && same_hypergraph(c, d)) && ok;
    }

    {
        std::vector<DissimilarityMatrix> ms;
        for (int k = 0; k < 200 * scale; ++k) ms.push_back(random_dissimilarity(6, 0, 3, 1000 + static_cast<std::uint64_t>(k)));
        std::vector<RankResult> a, b;
        const double ts = seconds([&] { a = exact_rank_batch(ms, Notion::Tree, Execution::Serial); });
        const double tp = seconds([&] { b = exact_rank_batch(ms, Notion::Tree, Execution::Parallel); });
        bool agree = a.size() == b.size();
        for (std::size_t k = 0; agree && k < a.size(); ++k) agree = a[k].lower == b[k].lower && a[k].upper == b[k].upper;
        ok = report("exact_rank_batch (tree, 6)", ts, tp, agree) && ok;
    }

    {
        DimensionReport a, b;
        const int trials = 16 * scale;
        const double ts = seconds([&] { a = sampled_local_dimension(Notion::Tree, 8, 3, trials, 11, Execution::Serial); });
        const double tp = seconds([&] { b = sampled_local_dimension(Notion::Tree, 8, 3, trials, 11, Execution::Parallel); });
        ok = report("sampled_local_dimension", ts, tp, a.sampled_value == b.sampled_value && a.stable_trials == b.stable_trials) && ok;
    }

    return ok ? 0 : 1;
}
