// troprank: ranks, decompositions and certificates for tropical matrices.
#include "troprank/classify.hpp"
#include "troprank/covers.hpp"
#include "troprank/generators.hpp"
#include "troprank/io.hpp"
#include "troprank/small_cases.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace troprank;

namespace {

enum Exit { kDetermined = 0, kUsage = 2, kInterval = 3, kInfinite = 4 };

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int exit_for(const RankResult& r)
{
    if (r.infinite) return kInfinite;
    return r.determined() ? kDetermined : kInterval;
}

// Star tree and tree notions read symmetric files through the projection.
AnyMatrix for_notion(const AnyMatrix& m, Notion notion)
{
    if (const auto* s = std::get_if<SymmetricMatrix>(&m); s && notion != Notion::SymmetricBarvinok) return project(*s);
    if (std::holds_alternative<DissimilarityMatrix>(m) && notion == Notion::SymmetricBarvinok)
        throw Error("symmetric Barvinok rank needs a symmetric matrix file");
    return m;
}

Json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(std::string("bad JSON in '") + path + "': " + e.what());
    }
}

struct RankArgs {
    std::string file;
    std::string notion = "sym";
    std::string method = "auto";
    int budget = 0;
    std::uint64_t max_nodes = 20'000'000;
};

int cmd_rank(const RankArgs& a)
{
    const Notion notion = parse_notion(a.notion);
    const AnyMatrix m = for_notion(read_matrix_file(a.file), notion);
    RankOptions opt;
    opt.budget = a.budget;
    opt.max_nodes = a.max_nodes;
    RankResult r;
    if (a.method == "exact") r = exact_rank(m, notion, opt);
    else if (a.method == "bounds") r = rank_bounds(m, notion, opt.coloring);
    else if (a.method == "auto") r = auto_rank(m, notion, opt);
    else throw Error("unknown method '" + a.method + "' (exact, bounds, auto)");
    emit(to_json(r));
    return exit_for(r);
}

int cmd_decompose(const std::string& file, const std::string& notion_name, bool minimize)
{
    const Notion notion = parse_notion(notion_name);
    const AnyMatrix m = for_notion(read_matrix_file(file), notion);
    Decomposition d;
    if (minimize) {
        const auto r = exact_rank(m, notion);
        if (r.infinite) {
            emit(to_json(r));
            return kInfinite;
        }
        d = *r.decomposition;
        if (!r.determined()) d.notes.push_back("search ended with rank in [" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]");
    } else {
        if (const auto* s = std::get_if<SymmetricMatrix>(&m))
            if (auto w = infinite_rank_witness(*s)) {
                std::cerr << "infinite symmetric Barvinok rank: 2 M" << pair_label(*w) << " < M_ii + M_jj\n";
                emit(Json{{"rank", "infinity"}, {"infinite_witness", Json::array({w->i + 1, w->j + 1})}});
                return kInfinite;
            }
        d = upper_decomposition(m, notion);
    }
    Json out = to_json(d);
    out["verified"] = verify(m, d).ok;
    emit(out);
    return kDetermined;
}

int cmd_deficiency(const std::string& file, const std::string& basis_name, const std::string& format, bool petersen,
                   std::uint64_t max_nodes)
{
    const AnyMatrix raw = read_matrix_file(file);
    const Basis basis = basis_name.empty() ? (std::holds_alternative<SymmetricMatrix>(raw) ? Basis::SymmetricMinors : Basis::Pluecker)
                                           : parse_basis(basis_name);
    AnyMatrix m = raw;
    if (basis != Basis::SymmetricMinors) m = for_notion(raw, Notion::Tree);
    else if (!std::holds_alternative<SymmetricMatrix>(m)) throw Error("the minors basis needs a symmetric matrix file");
    const auto h = std::visit([&](const auto& x) { return build_deficiency(x, basis, Execution::Parallel); }, m);
    ColoringLimits limits;
    limits.max_nodes = max_nodes;
    const auto chi = chromatic_number(h, limits);
    if (format == "dot") {
        std::cout << to_dot(h);
    } else if (format == "json") {
        Json out = to_json(h, chi);
        if (petersen) {
            const auto* d = std::get_if<DissimilarityMatrix>(&m);
            if (d == nullptr || d->size() != 5 || basis != Basis::Pluecker) throw Error("--petersen needs a 5x5 matrix and the pluecker basis");
            out["petersen"] = to_json(classify_petersen(*d));
        }
        emit(out);
    } else {
        throw Error("unknown format '" + format + "' (json, dot)");
    }
    return kDetermined;
}

int cmd_generate(const std::string& name, const std::vector<long long>& params, bool list)
{
    if (list) {
        for (const auto& g : generator_catalog()) std::cout << g.name << (g.params.empty() ? "" : " " + g.params) << "\n    " << g.description << '\n';
        return kDetermined;
    }
    std::cout << format_matrix(generate(name, params));
    return kDetermined;
}

int cmd_dimension(const std::string& notion_name, int n, int r, int trials, std::uint64_t seed, const std::vector<int>& grid, bool csv)
{
    const Notion notion = parse_notion(notion_name);
    std::vector<DimensionReport> reps;
    if (grid.size() == 2) reps = dimension_grid(notion, grid[0], grid[1], trials, seed, Execution::Parallel);
    else if (n > 0 && r > 0) reps.push_back(sampled_local_dimension(notion, n, r, trials, seed, Execution::Parallel));
    else throw Error("dimension needs --n and --r, or --grid NMIN NMAX");
    bool all = true;
    for (const auto& x : reps) all = all && x.matches();
    if (csv) {
        std::cout << "notion,n,r,formula,sampled,ambient,stable_trials,trials\n";
        for (const auto& x : reps)
            std::cout << to_string(x.notion) << ',' << x.n << ',' << x.r << ',' << x.formula_value << ',' << x.sampled_value << ','
                      << x.ambient << ',' << x.stable_trials << ',' << x.trials << '\n';
    } else if (reps.size() == 1) {
        emit(to_json(reps.front()));
    } else {
        Json a = Json::array();
        for (const auto& x : reps) a.push_back(to_json(x));
        emit(a);
    }
    return all ? kDetermined : kInterval;
}

int cmd_verify(const std::string& file, const std::string& decomposition_file)
{
    const AnyMatrix raw = read_matrix_file(file);
    Json j = read_json(decomposition_file);
    if (!j.contains("summands") && j.contains("decomposition")) j = j["decomposition"];
    const Decomposition d = decomposition_from_json(j);
    const AnyMatrix m = d.notion == Notion::SymmetricBarvinok ? raw : for_notion(raw, d.notion);
    const auto rep = verify(m, d);
    emit(to_json(rep));
    return rep.ok ? kDetermined : 1;
}

int cmd_cover(const std::string& file, const std::string& notion_name)
{
    const Notion notion = parse_notion(notion_name);
    const AnyMatrix m = for_notion(read_matrix_file(file), notion);
    ZeroOneRank z;
    if (notion == Notion::SymmetricBarvinok) z = symmetric_rank_01(std::get<SymmetricMatrix>(m));
    else if (notion == Notion::StarTree) z = star_tree_rank_01(std::get<DissimilarityMatrix>(m));
    else z = tree_rank_01(std::get<DissimilarityMatrix>(m));
    emit(to_json(z));
    if (z.infinite) return kInfinite;
    return z.determined() ? kDetermined : kInterval;
}

struct ExperimentArgs {
    std::string name;
    std::string notion = "tree";
    int n = 5;
    int count = 100;
    int lo = 0;
    int hi = 9;
    std::uint64_t seed = 1;
    std::uint64_t max_nodes = 2'000'000;
};

// Does chi(deficiency) ever fall short of the rank?
int experiment_chi_gap(const ExperimentArgs& a)
{
    const Notion notion = parse_notion(a.notion);
    std::vector<RankResult> results;
    std::vector<AnyMatrix> inputs;
    RankOptions opt;
    opt.max_nodes = a.max_nodes;
    if (notion == Notion::SymmetricBarvinok) {
        std::vector<SymmetricMatrix> ms;
        for (std::uint64_t k = 0; static_cast<int>(ms.size()) < a.count; ++k) {
            auto m = random_symmetric(a.n, a.lo, a.hi, a.seed + k);
            if (symmetric_rank_finite(m)) ms.push_back(std::move(m));
        }
        results = exact_rank_batch(ms, Execution::Parallel, opt);
        inputs.assign(ms.begin(), ms.end());
    } else {
        std::vector<DissimilarityMatrix> ms;
        for (int k = 0; k < a.count; ++k) ms.push_back(random_dissimilarity(a.n, a.lo, a.hi, a.seed + static_cast<std::uint64_t>(k)));
        results = exact_rank_batch(ms, notion, Execution::Parallel, opt);
        inputs.assign(ms.begin(), ms.end());
    }
    int equal = 0;
    int undetermined = 0;
    Json gaps = Json::array();
    for (std::size_t k = 0; k < results.size(); ++k) {
        const auto& r = results[k];
        if (!r.determined()) {
            ++undetermined;
            continue;
        }
        if (r.chromatic == r.upper && r.chromatic_exact) ++equal;
        else gaps.push_back(Json{{"matrix", to_json(inputs[k])}, {"chromatic", r.chromatic}, {"rank", r.upper}});
    }
    emit(Json{{"experiment", "chi-gap"}, {"notion", to_string(notion)}, {"n", a.n}, {"count", static_cast<int>(results.size())},
              {"chi_equals_rank", equal}, {"undetermined", undetermined}, {"gaps", std::move(gaps)}});
    return kDetermined;
}

// Random 10 x 10 search for a deficiency chromatic number of 7.
int experiment_tree10(const ExperimentArgs& a)
{
    std::vector<int> chi(static_cast<std::size_t>(a.count), 0);
    ColoringLimits limits;
    limits.max_nodes = a.max_nodes;
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < a.count; ++k) {
        const auto m = random_dissimilarity(10, a.lo, a.hi, a.seed + static_cast<std::uint64_t>(k));
        chi[static_cast<std::size_t>(k)] = chromatic_number(build_deficiency(m, Basis::Pluecker), limits).lower;
    }
    Json candidates = Json::array();
    int best = 0;
    for (int k = 0; k < a.count; ++k) {
        best = std::max(best, chi[static_cast<std::size_t>(k)]);
        if (chi[static_cast<std::size_t>(k)] >= 7)
            candidates.push_back(Json{{"seed", a.seed + static_cast<std::uint64_t>(k)}, {"chromatic_lower", chi[static_cast<std::size_t>(k)]}});
    }
    emit(Json{{"experiment", "tree10"}, {"count", a.count}, {"max_chromatic_lower", best}, {"candidates", std::move(candidates)}});
    return kDetermined;
}

// Tree rank 2 versus tree rank <= 2 on every 6 x 6 principal submatrix.
int experiment_submatrix6(const ExperimentArgs& a)
{
    if (a.n < 7) throw Error("submatrix6 needs n >= 7");
    int consistent = 0;
    int local_only = 0;
    int undetermined = 0;
    Json counterexamples = Json::array();
    RankOptions opt;
    opt.budget = 2;
    opt.max_nodes = a.max_nodes;
    for (int k = 0; k < a.count; ++k) {
        const std::uint64_t s = a.seed + 3 * static_cast<std::uint64_t>(k);
        auto m = trop_sum(random_tree(a.n, a.lo, a.hi, s).distances(), random_tree(a.n, a.lo, a.hi, s + 1).distances());
        if (k % 2 == 1) {
            const Pair p = m.position(static_cast<int>(s % static_cast<std::uint64_t>(m.num_positions())));
            m.set(p.i, p.j, m(p.i, p.j) + Rational(k % 4 == 1 ? 1 : -1));
        }
        bool all_small = true;
        std::vector<int> idx;
        std::vector<int> choose(static_cast<std::size_t>(a.n), 0);
        std::fill(choose.end() - 6, choose.end(), 1);
        do {
            idx.clear();
            for (int i = 0; i < a.n; ++i)
                if (choose[static_cast<std::size_t>(i)]) idx.push_back(i);
            const auto r = exact_rank(m.principal(idx), Notion::Tree, opt);
            if (r.lower > 2) all_small = false;
        } while (all_small && std::next_permutation(choose.begin(), choose.end()));
        if (!all_small) continue;
        const auto full = exact_rank(m, Notion::Tree, opt);
        if (!full.determined() && full.lower <= 2) ++undetermined;
        else if (full.lower <= 2) ++consistent;
        else {
            ++local_only;
            counterexamples.push_back(to_json(AnyMatrix(m)));
        }
    }
    emit(Json{{"experiment", "submatrix6"}, {"n", a.n}, {"count", a.count}, {"all_6x6_rank_le_2", consistent + local_only + undetermined},
              {"rank_le_2", consistent}, {"rank_gt_2", local_only}, {"undetermined", undetermined}, {"counterexamples", std::move(counterexamples)}});
    return kDetermined;
}

int cmd_experiment(const ExperimentArgs& a)
{
    if (a.name == "chi-gap") return experiment_chi_gap(a);
    if (a.name == "tree10") return experiment_tree10(a);
    if (a.name == "submatrix6") return experiment_submatrix6(a);
    throw Error("unknown experiment '" + a.name + "' (chi-gap, tree10, submatrix6)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Symmetric Barvinok, star tree and tree rank over the min-plus semiring"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP threads (default: runtime choice)");

    RankArgs rank;
    auto* rank_cmd = app.add_subcommand("rank", "rank of a matrix file as JSON");
    rank_cmd->add_option("file", rank.file)->required();
    rank_cmd->add_option("--notion", rank.notion, "sym, star or tree");
    rank_cmd->add_option("--method", rank.method, "exact, bounds or auto");
    rank_cmd->add_option("--budget", rank.budget, "largest rank searched (0: up to the construction)");
    rank_cmd->add_option("--max-nodes", rank.max_nodes, "search nodes per candidate rank");

    std::string file;
    std::string second_file;
    std::string notion = "sym";
    bool minimize = false;
    auto* dec_cmd = app.add_subcommand("decompose", "verified decomposition as JSON");
    dec_cmd->add_option("file", file)->required();
    dec_cmd->add_option("--notion", notion, "sym, star or tree");
    dec_cmd->add_flag("--minimize", minimize, "search for a minimum decomposition");

    std::string basis;
    std::string format = "json";
    bool petersen = false;
    std::uint64_t max_nodes = 50'000'000;
    auto* def_cmd = app.add_subcommand("deficiency", "deficiency hypergraph and its chromatic number");
    def_cmd->add_option("file", file)->required();
    def_cmd->add_option("--basis", basis, "minors, star or pluecker (default by file kind)");
    def_cmd->add_option("--format", format, "json or dot");
    def_cmd->add_flag("--petersen", petersen, "classify a 5x5 deficiency graph");
    def_cmd->add_option("--max-nodes", max_nodes, "coloring search nodes");

    std::string gen_name;
    std::vector<long long> gen_params;
    bool list = false;
    auto* gen_cmd = app.add_subcommand("generate", "write a named example matrix");
    gen_cmd->add_option("name", gen_name);
    gen_cmd->add_option("params", gen_params);
    gen_cmd->add_flag("--list", list, "list generators");

    int dim_n = 0;
    int dim_r = 0;
    int trials = 10;
    std::uint64_t seed = 1;
    std::vector<int> grid;
    bool csv = false;
    auto* dim_cmd = app.add_subcommand("dimension", "secant set dimension: formula and sampled local dimension");
    dim_cmd->add_option("--notion", notion, "sym, star or tree");
    dim_cmd->add_option("--n", dim_n);
    dim_cmd->add_option("--r", dim_r);
    dim_cmd->add_option("--trials", trials);
    dim_cmd->add_option("--seed", seed);
    dim_cmd->add_option("--grid", grid, "NMIN NMAX: every r for each n")->expected(2);
    dim_cmd->add_flag("--csv", csv);

    auto* ver_cmd = app.add_subcommand("verify", "check a decomposition JSON against a matrix file");
    ver_cmd->add_option("file", file)->required();
    ver_cmd->add_option("decomposition", second_file)->required();

    auto* cov_cmd = app.add_subcommand("cover", "0/1 matrix rank from graph covers");
    cov_cmd->add_option("file", file)->required();
    cov_cmd->add_option("--notion", notion, "sym, star or tree");

    ExperimentArgs ex;
    auto* exp_cmd = app.add_subcommand("experiment", "open-question harnesses: chi-gap, tree10, submatrix6");
    exp_cmd->add_option("name", ex.name)->required();
    exp_cmd->add_option("--notion", ex.notion);
    exp_cmd->add_option("--n", ex.n);
    exp_cmd->add_option("--count", ex.count);
    exp_cmd->add_option("--lo", ex.lo);
    exp_cmd->add_option("--hi", ex.hi);
    exp_cmd->add_option("--seed", ex.seed);
    exp_cmd->add_option("--max-nodes", ex.max_nodes);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (*rank_cmd) return cmd_rank(rank);
        if (*dec_cmd) return cmd_decompose(file, notion, minimize);
        if (*def_cmd) return cmd_deficiency(file, basis, format, petersen, max_nodes);
        if (*gen_cmd) return cmd_generate(gen_name, gen_params, list);
        if (*dim_cmd) return cmd_dimension(notion, dim_n, dim_r, trials, seed, grid, csv);
        if (*ver_cmd) return cmd_verify(file, second_file);
        if (*cov_cmd) return cmd_cover(file, notion);
        if (*exp_cmd) return cmd_experiment(ex);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
