#pragma once

#include "troprank/decomposition.hpp"
#include "troprank/execution.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace troprank {

/// C(k, 2), zero for k < 2.
long long choose2(long long k);

/// Dimension of the set of rank <= r matrices (ambient dimension once saturated).
int dimension_formula(Notion notion, int n, int r);
/// Dimension of the ambient matrix space: C(n+1, 2) symmetric, C(n, 2) dissimilarity.
int ambient_dimension(Notion notion, int n);

struct DimensionReport {
    Notion notion = Notion::SymmetricBarvinok;
    int n = 0;
    int r = 0;
    int formula_value = 0;
    int sampled_value = -1;       // -1 when every trial was degenerate
    int ambient = 0;
    int parameters = 0;           // free parameters of the construction
    int trials = 0;
    int stable_trials = 0;        // trials whose argmin pattern survived perturbation
    std::uint64_t seed = 0;
    [[nodiscard]] bool matches() const { return sampled_value == formula_value; }
};

/// Local dimension at random generic points of the dimension-proof
/// parametrizations: each output entry is attained by a unique summand, so the
/// map is affine nearby and its rank is computed exactly. Best over trials;
/// the parallel kernel runs trials on separate threads with identical results.
DimensionReport sampled_local_dimension(Notion notion, int n, int r, int trials, std::uint64_t seed,
                                        Execution exec = Execution::Serial);

/// Reports for every 1 <= r <= r_max(n) and n in [n_min, n_max].
std::vector<DimensionReport> dimension_grid(Notion notion, int n_min, int n_max, int trials, std::uint64_t seed,
                                            Execution exec = Execution::Serial);

}  // namespace troprank
