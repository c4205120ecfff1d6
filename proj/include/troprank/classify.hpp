#pragma once

#include "troprank/rank_engine.hpp"

#include <optional>

namespace troprank {

/// Answer from an exact characterization when one applies: 3 x 3 symmetric
/// matrices, 5 x 5 star tree and tree rank, and 0/1 matrices via graph covers.
std::optional<RankResult> closed_form_rank(const AnyMatrix& m, Notion notion);

/// The closed form when available, else exact search within `options`
/// (which may end in an interval).
RankResult auto_rank(const AnyMatrix& m, Notion notion, const RankOptions& options = {});

}  // namespace troprank
