#pragma once

#include "toricirc/matrix.hpp"
#include "toricirc/numeric.hpp"

#include <optional>
#include <vector>

namespace toricirc {

// Solve M x = rhs over the rationals (M given as rows). Returns one solution
// with free variables set to zero, or nullopt when inconsistent.
std::optional<RatVec> solve_rational(const std::vector<RatVec>& m, const RatVec& rhs);

// Basis of { x : M x = 0 } over the rationals.
std::vector<RatVec> rational_nullspace(const std::vector<RatVec>& m);

// One inequality: coeffs . x + constant >= 0.
struct LinearInequality {
    RatVec coeffs;
    Rat constant;
};

// Exact Fourier-Motzkin elimination. Returns a satisfying point when the
// system is feasible.
std::optional<RatVec> fourier_motzkin(std::vector<LinearInequality> system, std::size_t nvars);

// z in the cone generated by the columns of a, decided by exact feasibility
// of { x >= 0 : A x = z }.
bool in_cone(const IntMatrix& a, const IntVec& z);

// A strictly positive integer vector w orthogonal to the given kernel basis
// (equivalently, w lies in the rational row space of a). Such a grading
// exists iff the kernel meets the nonnegative orthant only at zero.
std::optional<IntVec> positive_grading(const IntMatrix& a, const std::vector<IntVec>& kernel_basis);

RatVec to_rat(const IntVec& v);

} // namespace toricirc
