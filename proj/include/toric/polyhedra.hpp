#pragma once
// Exact feasibility of small systems of linear equalities and (strict) inequalities.

#include "toric/exact_linalg.hpp"

#include <optional>
#include <vector>

namespace toric {

struct LinConstraint {
    enum Kind { Eq, Gt, Ge };
    RatVec c;  // c.x + e  (kind)  0
    Rat e;
    Kind kind;
};

// A rational point satisfying every constraint, or nothing. Fourier-Motzkin with back substitution.
std::optional<RatVec> feasible_point(int dim, const std::vector<LinConstraint>& cons);

}  // namespace toric
