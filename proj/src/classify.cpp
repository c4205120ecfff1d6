#include "troprank/classify.hpp"

#include "troprank/covers.hpp"
#include "troprank/small_cases.hpp"

namespace troprank {

namespace {

template <PackedMatrix M>
void fill_chromatic(RankResult& res, const M& m)
{
    const auto chi = chromatic_number(build_deficiency(m, basis_for(res.notion)));
    res.chromatic = chi.lower;
    res.chromatic_exact = chi.exact;
}

RankResult from_zero_one(const ZeroOneRank& z)
{
    RankResult res;
    res.notion = z.notion;
    res.infinite = z.infinite;
    res.infinite_witness = z.infinite_witness;
    res.lower = z.infinite ? 0 : z.lower;
    res.upper = z.infinite ? 0 : z.upper;
    res.lower_certificate = LowerCertificate::Characterization;
    res.method = z.method;
    res.decomposition = z.decomposition;
    return res;
}

RankResult determined(Notion notion, int rank, std::string method, Decomposition d)
{
    RankResult res;
    res.notion = notion;
    res.lower = res.upper = rank;
    res.lower_certificate = rank == 1 ? LowerCertificate::Trivial : LowerCertificate::Characterization;
    res.method = std::move(method);
    res.decomposition = std::move(d);
    return res;
}

std::optional<RankResult> symmetric_closed_form(const SymmetricMatrix& m)
{
    if (m.size() == 3) {
        const auto s = sym3_rank(m);
        if (s.rank.is_infinite()) {
            RankResult res;
            res.infinite = true;
            res.infinite_witness = s.infinite_witness;
            res.lower = res.upper = res.chromatic = 0;
            res.lower_certificate = LowerCertificate::Characterization;
            res.method = "sym3";
            return res;
        }
        auto res = determined(Notion::SymmetricBarvinok, s.rank.value(), "sym3", *s.decomposition);
        fill_chromatic(res, m);
        return res;
    }
    if (is_zero_one(m) && m.size() <= 22) {
        auto res = from_zero_one(symmetric_rank_01(m));
        if (!res.infinite) fill_chromatic(res, m);
        return res;
    }
    return std::nullopt;
}

std::optional<RankResult> dissimilarity_closed_form(const DissimilarityMatrix& m, Notion notion)
{
    std::optional<RankResult> res;
    if (m.size() == 5 && notion == Notion::StarTree) {
        const auto t = star5_rank2_test(m);
        if (t.rank_at_most_two) {
            res = determined(notion, t.rank_one ? 1 : 2, "pentad", star5_rank2_decompose(m));
        } else {
            res = determined(notion, 3, "pentad", star_upper_decomposition(m));
        }
    } else if (m.size() == 5 && notion == Notion::Tree) {
        const auto t = tree5_rank(m);
        res = determined(notion, t.rank, "polynomial-P", t.decomposition ? *t.decomposition : tree_upper_decomposition(m));
    } else if (is_zero_one(m)) {
        if (notion == Notion::StarTree && m.size() <= 22) res = from_zero_one(star_tree_rank_01(m));
        if (notion == Notion::Tree && m.size() <= 12) res = from_zero_one(tree_rank_01(m));
    }
    if (res) fill_chromatic(*res, m);
    return res;
}

}  // namespace

std::optional<RankResult> closed_form_rank(const AnyMatrix& any, Notion notion)
{
    if (const auto* s = std::get_if<SymmetricMatrix>(&any)) {
        if (notion == Notion::SymmetricBarvinok) return symmetric_closed_form(*s);
        return dissimilarity_closed_form(project(*s), notion);
    }
    if (notion == Notion::SymmetricBarvinok) throw Error("symmetric Barvinok rank needs a symmetric matrix");
    return dissimilarity_closed_form(std::get<DissimilarityMatrix>(any), notion);
}

RankResult auto_rank(const AnyMatrix& m, Notion notion, const RankOptions& options)
{
    if (auto res = closed_form_rank(m, notion); res && res->determined()) return *res;
    return exact_rank(m, notion, options);
}

}  // namespace troprank
