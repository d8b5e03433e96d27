#pragma once

#include "toricirc/configuration.hpp"

#include <set>
#include <vector>

namespace toricirc {

// A primitive support-minimal integer kernel vector together with its
// binomial realization T^{v+} - T^{v-}. The two terms have disjoint support.
struct Circuit {
    IntVec vector;
    Binomial binomial;

    bool operator==(const Circuit&) const = default;
};

// Complete duplicate-free circuit list, sorted by (support size, support,
// vector). Column subsets are scanned by increasing size; any set containing
// a known circuit support is skipped, so every dependent set that survives is
// support-minimal with a one-dimensional kernel.
std::vector<Circuit> enumerate_circuits(const Configuration& c);

// First circuit, in canonical order and trying both signs, that is in harmony
// with alpha (no strictly opposite signs anywhere) and supported inside
// supp(alpha). The result may be the negation of a stored circuit.
Circuit harmonious_circuit(const Configuration& c, const IntVec& alpha);

// { supp(gamma) : gamma circuit }, the circuits of the vector matroid M[A].
std::set<std::vector<std::size_t>> matroid_circuit_supports(const Configuration& c);

// True iff plus - minus is (up to sign) a circuit vector and the two terms
// are coprime.
bool is_circuit(const Configuration& c, const Binomial& b);

} // namespace toricirc
