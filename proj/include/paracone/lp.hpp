#pragma once

#include <optional>

#include "paracone/linalg.hpp"

namespace paracone {

// Exact rational linear feasibility, used for chamber enumeration, adapted
// bases and facet extraction. Phase-1 simplex with Bland's rule, so every
// answer is exact and termination is guaranteed.

/// Feasibility of { x >= 0 : A x = b }. Returns a feasible x or nullopt.
std::optional<RatVec> lp_feasible_point_eq(const RatMat& a, const RatVec& b);

/// Feasibility of { t free : G t >= b }. Returns a feasible t or nullopt.
std::optional<RatVec> lp_feasible_point_ineq(const RatMat& g, const RatVec& b);

/// Does target lie in the cone spanned by the generator vectors?
bool lp_in_cone(const std::vector<IntVec>& gens, const IntVec& target);

}  // namespace paracone
