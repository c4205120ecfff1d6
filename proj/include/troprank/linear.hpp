#pragma once

#include "troprank/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace troprank {

enum class Relation { LessEqual, Equal, GreaterEqual };

/// sum_k coeffs[k] * x_k  (rel)  rhs
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::LessEqual;
    Rational rhs;
};

struct FeasibilityLimits {
    std::size_t max_constraints = 200'000;  // per elimination stage
};

/// Exact feasibility of a system over the rationals: equalities are removed by
/// Gaussian elimination, inequalities by Fourier-Motzkin, and a witness is
/// recovered by back-substitution. Returns nullopt when infeasible; throws
/// Error if an elimination stage exceeds the limit.
std::optional<std::vector<Rational>> solve_feasibility(int num_vars, const std::vector<LinearConstraint>& constraints,
                                                       const FeasibilityLimits& limits = {});

/// Rank over Q by fraction-free (Bareiss) elimination in big integers.
int matrix_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace troprank
