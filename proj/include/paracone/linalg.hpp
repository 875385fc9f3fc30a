#pragma once

#include <optional>
#include <vector>

#include "paracone/common.hpp"

namespace paracone {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

IntMat identity_mat(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& m, const IntVec& v);
RatVec mat_vec(const RatMat& m, const RatVec& v);
RatMat rat_mat_mul(const RatMat& a, const RatMat& b);
RatMat to_rat(const IntMat& m);

/// Gauss-Jordan inverse over the rationals; nullopt when singular.
std::optional<RatMat> rat_inverse(const RatMat& m);

/// Unique solution of a square system A x = b; nullopt when singular.
std::optional<RatVec> rat_solve(RatMat a, RatVec b);

Rat rat_det(RatMat m);

bool is_integral(const RatMat& m);
IntMat to_int(const RatMat& m);

/// Divides an integer vector by the gcd of its entries (sign preserved).
IntVec primitive(IntVec v);

/// Clears denominators and reduces; the primitive integer vector on the
/// same ray as the rational input.
IntVec primitive_of(const RatVec& v);

long long dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);

}  // namespace paracone
