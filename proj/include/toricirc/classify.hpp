#pragma once

#include "toricirc/circuits.hpp"
#include "toricirc/groebner.hpp"

#include <optional>

namespace toricirc {

// a term with all exponents 0 or 1 on one side
bool has_square_free_term(const Binomial& b);

// equal maximal exponents on both sides
bool is_balanced(const Binomial& b);

// Auxiliary binomial attached to an unbalanced circuit g: one square-free
// term supported inside the side of g with the smaller maximal exponent, the
// other term meeting the side with the larger one, and the whole thing in I_A.
struct ConnectorCertificate {
    Circuit circuit;
    Binomial connector;
    bool membership_witness; // connector lies in the square-free-term circuit ideal
};

bool is_connector(const Configuration& c, const Binomial& candidate, const Circuit& g);

// Bounded connector search in canonical order (square-free terms over subsets
// of the low side, partner monomials by degree-pinned enumeration). Prefers a
// certificate whose membership witness holds; otherwise returns the first
// connector found; nothing when the bound is exhausted without a hit.
std::optional<ConnectorCertificate> find_connector(const Configuration& c, const Circuit& g,
                                                   const Int& maxdeg);

// all generators on an affine hyperplane <w, x> = 1 off the origin
bool is_homogeneous(const Configuration& c);

// the hyperplane functional when it exists
std::optional<RatVec> grading_functional(const Configuration& c);

struct NormalityResult {
    Int bound;
    bool normal;
    std::optional<IntVec> witness; // point of ZA and the cone missing from NA
    Int witness_degree = 0;
};

// Bounded normality oracle: scans every lattice point of the cone with degree
// at most `bound` and tests semigroup membership by exact decomposition. A
// `true` verdict certifies normality only up to the bound.
NormalityResult is_normal_up_to(const Configuration& c, const Int& bound);

// twice the largest circuit binomial degree, the documented oracle default
Int default_normal_bound(const Configuration& c);

enum class TriState { Holds, Fails, Unknown };

struct GeneratorReport {
    bool homogeneous = false;
    bool cond_a = false;                 // I_A generated by circuits
    bool cond_b = false;                 // ... by circuits with a square-free term
    TriState cond_c = TriState::Unknown; // every unbalanced circuit has a good connector
    bool cond_c_exhaustive = false;      // the connector search was complete
    std::optional<NormalityResult> normal_up_to; // absent when not homogeneous
    std::vector<Binomial> witnesses;     // generators failing the membership tests
    std::vector<Circuit> circuits;
    std::vector<Binomial> generators;    // minimal when homogeneous
};

// Runs the full generation-by-circuits analysis. When the configuration is
// homogeneous and normal up to the bound, the report cross-checks the
// equivalences (a) <-> (b) <-> (c); a violation throws internal_error since
// it would mean an engine bug.
GeneratorReport check_generation_by_circuits(const Configuration& c, const Int& maxdeg);

} // namespace toricirc
