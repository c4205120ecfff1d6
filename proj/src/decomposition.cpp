#include "troprank/decomposition.hpp"

namespace troprank {

std::string to_string(Notion n)
{
    switch (n) {
    case Notion::SymmetricBarvinok: return "symmetric-barvinok";
    case Notion::StarTree: return "star-tree";
    case Notion::Tree: return "tree";
    }
    return "?";
}

Notion parse_notion(std::string_view name)
{
    if (name == "sym" || name == "symmetric-barvinok" || name == "symmetric") return Notion::SymmetricBarvinok;
    if (name == "star" || name == "star-tree") return Notion::StarTree;
    if (name == "tree") return Notion::Tree;
    throw Error("unknown rank notion '" + std::string(name) + "'");
}

Basis basis_for(Notion n)
{
    switch (n) {
    case Notion::SymmetricBarvinok: return Basis::SymmetricMinors;
    case Notion::StarTree: return Basis::StarTree;
    case Notion::Tree: return Basis::Pluecker;
    }
    return Basis::SymmetricMinors;
}

Summand symmetric_summand(RowVector v)
{
    Summand s{rank_one_symmetric(v), std::move(v), std::nullopt};
    return s;
}

Summand star_summand(RowVector v)
{
    auto m = star_tree_matrix(v);
    auto t = WeightedTree::star(v);
    return Summand{std::move(m), std::move(v), std::move(t)};
}

Summand tree_summand(const DissimilarityMatrix& m)
{
    return Summand{m, std::nullopt, realize_tree(m)};
}

Summand tree_summand(WeightedTree t)
{
    auto m = t.distances();
    return Summand{std::move(m), std::nullopt, std::move(t)};
}

namespace {

template <PackedMatrix M>
VerifyReport verify_impl(const M& target, const Decomposition& d)
{
    VerifyReport rep;
    auto fail = [&](std::string msg, std::optional<int> k, std::optional<Pair> e) {
        rep.ok = false;
        rep.message = std::move(msg);
        rep.summand = k;
        rep.entry = e;
        return rep;
    };
    if (d.summands.empty()) return fail("empty decomposition", std::nullopt, std::nullopt);
    std::vector<M> terms;
    for (int k = 0; k < d.size(); ++k) {
        const Summand& s = d.summands[static_cast<std::size_t>(k)];
        const M* m = std::get_if<M>(&s.matrix);
        if (m == nullptr) return fail("summand lives in the wrong matrix space", k, std::nullopt);
        if (m->size() != target.size()) return fail("summand dimension differs from the target", k, std::nullopt);
        if constexpr (std::is_same_v<M, SymmetricMatrix>) {
            if (d.notion != Notion::SymmetricBarvinok) return fail("symmetric target needs a symmetric Barvinok decomposition", k, std::nullopt);
            if (!is_rank1_symmetric(*m)) return fail("summand is not a rank-1 symmetric matrix", k, std::nullopt);
            if (s.generator && !(rank_one_symmetric(*s.generator) == *m)) return fail("summand disagrees with its generator", k, std::nullopt);
        } else {
            if (d.notion == Notion::SymmetricBarvinok) return fail("dissimilarity target needs a star-tree or tree decomposition", k, std::nullopt);
            if (d.notion == Notion::StarTree && !is_star_tree(*m)) return fail("summand is not a star tree matrix", k, std::nullopt);
            if (d.notion == Notion::Tree && !is_tree_matrix(*m)) return fail("summand is not a tree matrix", k, std::nullopt);
            if (s.generator && !(star_tree_matrix(*s.generator) == *m)) return fail("summand disagrees with its generator", k, std::nullopt);
            if (s.tree) {
                if (!s.tree->is_valid()) return fail("summand tree is not a valid weighted tree", k, std::nullopt);
                if (!(s.tree->distances() == *m)) return fail("summand tree distances disagree with its matrix", k, std::nullopt);
            }
        }
        terms.push_back(*m);
    }
    for (int p = 0; p < target.num_positions(); ++p) {
        const Pair pos = target.position(p);
        std::optional<Rational> best;
        for (const auto& t : terms) {
            const Rational& v = t(pos.i, pos.j);
            if (!best || v < *best) best = v;
        }
        if (*best != target(pos.i, pos.j)) {
            const std::string what = *best < target(pos.i, pos.j) ? "falls below" : "exceeds";
            return fail("tropical sum at " + pair_label(pos) + " is " + best->to_string() + " and " + what + " the target " +
                            target(pos.i, pos.j).to_string(),
                        std::nullopt, pos);
        }
    }
    return rep;
}

}  // namespace

VerifyReport verify(const SymmetricMatrix& target, const Decomposition& d) { return verify_impl(target, d); }
VerifyReport verify(const DissimilarityMatrix& target, const Decomposition& d) { return verify_impl(target, d); }

VerifyReport verify(const AnyMatrix& target, const Decomposition& d)
{
    return std::visit([&](const auto& m) { return verify_impl(m, d); }, target);
}

Decomposition as_tree_decomposition(const Decomposition& d)
{
    if (d.notion == Notion::SymmetricBarvinok) throw Error("a symmetric Barvinok decomposition has no tree form");
    Decomposition out{Notion::Tree, {}, d.notes};
    for (const auto& s : d.summands) {
        if (s.tree) out.summands.push_back(Summand{s.matrix, s.generator, s.tree});
        else out.summands.push_back(tree_summand(std::get<DissimilarityMatrix>(s.matrix)));
    }
    return out;
}

}  // namespace troprank
