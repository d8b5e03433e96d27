#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace toricirc {

// All integer arithmetic is arbitrary precision, no fixed-width fast paths.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Int gcd_int(const Int& a, const Int& b);
Int floor_div(const Int& a, const Int& b);
Int trunc_div(const Int& a, const Int& b);

bool is_zero(const IntVec& v);
std::vector<std::size_t> support(const IntVec& v);

// gcd of all entries; 0 for the zero vector
Int content(const IntVec& v);

// flips sign so the first nonzero entry is positive
IntVec sign_normalized(IntVec v);

IntVec negated(IntVec v);

// v / content(v), sign-normalized; throws on the zero vector
IntVec primitive_part(const IntVec& v);

// -1 / 0 / 1 under entrywise lexicographic comparison
int lex_compare(const IntVec& a, const IntVec& b);

Int dot(const IntVec& a, const IntVec& b);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);

} // namespace toricirc
