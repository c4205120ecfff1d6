#include "troprank/io.hpp"

#include <fstream>
#include <sstream>

namespace troprank {

namespace {

std::vector<std::string> tokens(std::string_view line)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

Json pair_json(Pair p) { return Json::array({p.i + 1, p.j + 1}); }

Json one_based(std::vector<int> v)
{
    for (int& x : v) ++x;
    return v;
}

}  // namespace

AnyMatrix parse_matrix(std::string_view text)
{
    std::vector<std::vector<std::string>> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto t = tokens(line);
        if (!t.empty()) lines.push_back(std::move(t));
    }
    if (lines.empty()) throw Error("matrix file: missing header");
    const auto& header = lines.front();
    if (header.size() != 2) throw Error("matrix file: header must be '<symmetric|dissimilarity> <n>'");
    const bool symmetric = header[0] == "symmetric";
    if (!symmetric && header[0] != "dissimilarity") throw Error("matrix file: unknown kind '" + header[0] + "'");
    int n = 0;
    try {
        n = std::stoi(header[1]);
    } catch (const std::exception&) {
        throw Error("matrix file: bad size '" + header[1] + "'");
    }
    if (n < 1) throw Error("matrix file: size must be positive");
    if (static_cast<int>(lines.size()) != n + 1) throw Error("matrix file: expected " + std::to_string(n) + " rows");
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        const auto& row = lines[static_cast<std::size_t>(i + 1)];
        if (static_cast<int>(row.size()) != n) throw Error("matrix file: row " + std::to_string(i + 1) + " needs " + std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j) {
            const std::string& cell = row[static_cast<std::size_t>(j)];
            if (!symmetric && i == j) {
                if (cell != "*") throw Error("matrix file: dissimilarity diagonal must be '*'");
                continue;
            }
            if (cell == "*") throw Error("matrix file: '*' is only allowed on a dissimilarity diagonal");
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational::parse(cell);
        }
    }
    if (symmetric) return SymmetricMatrix::from_rows(rows);
    return DissimilarityMatrix::from_rows(rows);
}

AnyMatrix read_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

std::string format_matrix(const AnyMatrix& any)
{
    std::ostringstream out;
    std::visit(
        [&](const auto& m) {
            constexpr bool sym = std::is_same_v<std::decay_t<decltype(m)>, SymmetricMatrix>;
            out << (sym ? "symmetric " : "dissimilarity ") << m.size() << '\n';
            for (int i = 0; i < m.size(); ++i) {
                for (int j = 0; j < m.size(); ++j) {
                    if (j > 0) out << ' ';
                    if (!sym && i == j) out << '*';
                    else out << m(i, j).to_string();
                }
                out << '\n';
            }
        },
        any);
    return out.str();
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const RowVector& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const AnyMatrix& any)
{
    return std::visit(
        [](const auto& m) {
            constexpr bool sym = std::is_same_v<std::decay_t<decltype(m)>, SymmetricMatrix>;
            Json rows = Json::array();
            for (int i = 0; i < m.size(); ++i) {
                Json row = Json::array();
                for (int j = 0; j < m.size(); ++j) row.push_back(!sym && i == j ? Json("*") : to_json(m(i, j)));
                rows.push_back(std::move(row));
            }
            return Json{{"kind", sym ? "symmetric" : "dissimilarity"}, {"n", m.size()}, {"rows", std::move(rows)}};
        },
        any);
}

Json to_json(const WeightedTree& t)
{
    Json edges = Json::array();
    for (const auto& e : t.edges()) edges.push_back(Json::array({e.u, e.v, to_json(e.weight)}));
    return Json{{"leaves", t.num_leaves()}, {"vertices", t.num_vertices()}, {"edges", std::move(edges)}, {"newick", t.to_newick()}};
}

Json to_json(const Decomposition& d)
{
    Json summands = Json::array();
    for (const auto& s : d.summands) {
        Json j{{"matrix", to_json(s.matrix)}};
        if (s.generator) j["generator"] = to_json(*s.generator);
        if (s.tree) j["tree"] = to_json(*s.tree);
        summands.push_back(std::move(j));
    }
    Json out{{"notion", to_string(d.notion)}, {"size", d.size()}, {"summands", std::move(summands)}};
    if (!d.notes.empty()) out["notes"] = d.notes;
    return out;
}

Json to_json(const VerifyReport& r)
{
    Json out{{"ok", r.ok}};
    if (!r.ok) out["message"] = r.message;
    if (r.summand) out["summand"] = *r.summand;
    if (r.entry) out["entry"] = pair_json(*r.entry);
    return out;
}

Json to_json(const RankResult& r)
{
    Json out{{"notion", to_string(r.notion)}};
    if (r.infinite) out["rank"] = "infinity";
    else if (r.determined()) out["rank"] = r.upper;
    else out["rank"] = nullptr;
    out["determined"] = r.determined();
    out["lower"] = r.infinite ? Json("infinity") : Json(r.lower);
    out["upper"] = r.infinite ? Json("infinity") : Json(r.upper);
    if (r.infinite_witness) out["infinite_witness"] = pair_json(*r.infinite_witness);
    out["lower_certificate"] = to_string(r.lower_certificate);
    out["chromatic"] = r.chromatic;
    out["chromatic_exact"] = r.chromatic_exact;
    out["method"] = r.method;
    if (r.decomposition) out["decomposition"] = to_json(*r.decomposition);
    return out;
}

Json to_json(const Cover& c)
{
    Json a = Json::array();
    for (const auto& e : c.elements) {
        Json j{{"kind", to_string(e.kind)}};
        switch (e.kind) {
        case CoverKind::Clique: j["vertices"] = one_based(e.vertices); break;
        case CoverKind::Star:
            j["center"] = e.center + 1;
            j["leaves"] = one_based(e.leaves);
            break;
        case CoverKind::Multipartite:
            j["parts"] = Json::array();
            for (const auto& p : e.parts) j["parts"].push_back(one_based(p));
            break;
        }
        a.push_back(std::move(j));
    }
    return a;
}

Json to_json(const ZeroOneRank& r)
{
    Json out{{"notion", to_string(r.notion)}};
    if (r.infinite) out["rank"] = "infinity";
    else if (r.determined()) out["rank"] = r.upper;
    else out["rank"] = nullptr;
    out["determined"] = r.determined();
    out["lower"] = r.lower;
    out["upper"] = r.upper;
    if (r.infinite_witness) out["infinite_witness"] = pair_json(*r.infinite_witness);
    out["method"] = r.method;
    out["cover"] = to_json(r.cover);
    out["solid"] = r.solid;
    if (r.notion == Notion::StarTree) out["weakening_example"] = r.weakening_example;
    if (r.decomposition) out["decomposition"] = to_json(*r.decomposition);
    return out;
}

Json to_json(const DeficiencyHypergraph& h, const ChromaticNumber& chi)
{
    Json edges = Json::array();
    for (std::size_t k = 0; k < h.hyperedges.size(); ++k) {
        Json labels = Json::array();
        for (int v : h.hyperedges[k]) labels.push_back(h.vertex_labels[static_cast<std::size_t>(v)]);
        edges.push_back(Json{{"vertices", h.hyperedges[k]}, {"labels", std::move(labels)}, {"from", h.sources[k]}});
    }
    Json c;
    if (chi.infinite) {
        c = Json{{"value", "infinity"}, {"loop_vertex", chi.loop_vertex}};
    } else {
        c = Json{{"value", chi.exact ? Json(chi.lower) : Json(nullptr)}, {"lower", chi.lower}, {"upper", chi.upper}, {"exact", chi.exact}, {"coloring", chi.colors}};
    }
    return Json{{"basis", to_string(h.basis)}, {"n", h.n}, {"vertices", h.vertex_labels}, {"hyperedges", std::move(edges)}, {"chromatic_number", std::move(c)}};
}

Json to_json(const PetersenClassification& c)
{
    Json edges = Json::array();
    for (const auto& [a, b] : c.edges) edges.push_back(Json::array({a, b}));
    Json out{{"class", to_string(c.kind)}, {"edges", std::move(edges)}};
    if (c.relabeling) out["relabeling"] = *c.relabeling;
    return out;
}

Json to_json(const DimensionReport& r)
{
    return Json{{"notion", to_string(r.notion)}, {"n", r.n},
                {"r", r.r}, {"formula", r.formula_value},
                {"sampled", r.sampled_value < 0 ? Json(nullptr) : Json(r.sampled_value)},
                {"matches", r.matches()}, {"ambient", r.ambient},
                {"parameters", r.parameters}, {"trials", r.trials},
                {"stable_trials", r.stable_trials}, {"seed", r.seed}};
}

namespace {

Rational rational_from(const Json& j)
{
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw Error("decomposition: expected a rational string or integer");
}

AnyMatrix matrix_from(const Json& j)
{
    const std::string kind = j.at("kind").get<std::string>();
    const auto& rows = j.at("rows");
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
        std::vector<Rational> vals;
        for (const auto& cell : row) vals.push_back(cell.is_string() && cell.get<std::string>() == "*" ? Rational(0) : rational_from(cell));
        r.push_back(std::move(vals));
    }
    if (kind == "symmetric") return SymmetricMatrix::from_rows(r);
    if (kind == "dissimilarity") return DissimilarityMatrix::from_rows(r);
    throw Error("decomposition: unknown matrix kind '" + kind + "'");
}

}  // namespace

Decomposition decomposition_from_json(const Json& j)
{
    Decomposition d;
    d.notion = parse_notion(j.at("notion").get<std::string>());
    for (const auto& s : j.at("summands")) {
        if (s.contains("generator")) {
            RowVector v;
            for (const auto& x : s["generator"]) v.push_back(rational_from(x));
            d.summands.push_back(d.notion == Notion::SymmetricBarvinok ? symmetric_summand(std::move(v)) : star_summand(std::move(v)));
        } else if (s.contains("tree")) {
            const auto& t = s["tree"];
            std::vector<TreeEdge> edges;
            for (const auto& e : t.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), rational_from(e.at(2))});
            d.summands.push_back(tree_summand(WeightedTree(t.at("leaves").get<int>(), t.at("vertices").get<int>(), std::move(edges))));
        } else {
            d.summands.push_back(Summand{matrix_from(s.at("matrix")), std::nullopt, std::nullopt});
        }
    }
    return d;
}

}  // namespace troprank
