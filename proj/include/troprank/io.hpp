#pragma once

#include "troprank/covers.hpp"
#include "troprank/deficiency.hpp"
#include "troprank/rank_engine.hpp"
#include "troprank/secant_dim.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace troprank {

using Json = nlohmann::ordered_json;

/// Matrix files: '#' comments, a header line "symmetric n" or "dissimilarity n",
/// then n rows of n entries (integers, "p/q" or decimals). Dissimilarity
/// diagonals hold "*".
AnyMatrix parse_matrix(std::string_view text);
AnyMatrix read_matrix_file(const std::string& path);
std::string format_matrix(const AnyMatrix& m);

// Pairs are reported with 1-based labels; rationals as exact strings.
Json to_json(const Rational& r);
Json to_json(const RowVector& v);
Json to_json(const AnyMatrix& m);
Json to_json(const WeightedTree& t);
Json to_json(const Decomposition& d);
Json to_json(const VerifyReport& r);
Json to_json(const RankResult& r);
Json to_json(const Cover& c);
Json to_json(const ZeroOneRank& r);
Json to_json(const DeficiencyHypergraph& h, const ChromaticNumber& chi);
Json to_json(const PetersenClassification& c);
Json to_json(const DimensionReport& r);

/// Rebuilds a decomposition written by to_json; each summand is taken from its
/// generator, else its tree, else its matrix rows.
Decomposition decomposition_from_json(const Json& j);

}  // namespace troprank
