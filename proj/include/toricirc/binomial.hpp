#pragma once

#include "toricirc/numeric.hpp"

#include <string>
#include <vector>

namespace toricirc {

// Monomials are exponent vectors; binomials carry implicit coefficients
// +1 / -1 and never materialize anything richer.
using Monomial = IntVec;

Int total_degree(const Monomial& m);
bool divides(const Monomial& m, const Monomial& n);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

struct Binomial {
    Monomial plus;
    Monomial minus;

    bool operator==(const Binomial&) const = default;
};

// T^a - T^b with the module-wide orientation: plus is the lexicographically
// larger exponent vector. Throws when a == b.
Binomial make_binomial(Monomial a, Monomial b);

// Positive/negative part realization T^{v+} - T^{v-} of an integer vector.
Binomial binomial_from_vector(const IntVec& v);

// plus - minus as a signed vector
IntVec binomial_difference(const Binomial& b);

Binomial normalized(const Binomial& b);
Binomial swapped(const Binomial& b);

// max of the two term degrees; in the graded case this is the degree
Int binomial_degree(const Binomial& b);

// canonical comparison: (degree, plus lex, minus lex)
bool binomial_less(const Binomial& a, const Binomial& b);

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names);
std::string binomial_string(const Binomial& b, const std::vector<std::string>& names);
std::vector<std::string> default_names(std::size_t q);

} // namespace toricirc
