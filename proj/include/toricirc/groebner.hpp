#pragma once

#include "toricirc/configuration.hpp"

#include <optional>
#include <vector>

namespace toricirc {

enum class OrderKind { GradedRevLex, GradedLex, Lex };

// Total monomial order compatible with multiplication. Graded kinds compare a
// positive weighted degree first (weights default to all ones, the standard
// grading) and tie-break lexicographically or reverse-lexicographically over
// a variable permutation.
class MonomialOrder {
public:
    static MonomialOrder graded_revlex(std::size_t nvars);
    static MonomialOrder graded_lex(std::size_t nvars);
    static MonomialOrder lex(std::size_t nvars);
    // Graded order with the given variable cheapest; the workhorse of
    // per-variable saturation.
    static MonomialOrder graded_revlex_variable_last(std::size_t nvars, std::size_t var,
                                                     IntVec weights = {});

    int compare(const Monomial& a, const Monomial& b) const; // -1 / 0 / 1
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    OrderKind kind() const { return kind_; }
    std::size_t nvars() const { return perm_.size(); }

private:
    MonomialOrder(OrderKind k, std::vector<std::size_t> perm, IntVec weights)
        : kind_(k), perm_(std::move(perm)), weights_(std::move(weights)) {}

    OrderKind kind_;
    std::vector<std::size_t> perm_;
    IntVec weights_;
};

struct BinomialIdeal {
    std::vector<Binomial> generators;
    // drops zero binomials and duplicates under sign and term swap
    static BinomialIdeal make(std::vector<Binomial> gens);
};

struct GroebnerBasis {
    std::vector<Binomial> elements; // oriented leading-term-first
    MonomialOrder order;
    bool reduced = false;
};

// Buchberger specialized to pure-difference binomials. Every S-polynomial and
// remainder stays a binomial with coefficients +1/-1 or vanishes; any
// violation throws internal_error. Returns the unique reduced basis.
GroebnerBasis buchberger(const BinomialIdeal& ideal, const MonomialOrder& ord);

// Remainder of f modulo the basis; nullopt means it reduced to zero.
std::optional<Binomial> normal_form(const Binomial& f, const GroebnerBasis& gb);

bool ideal_membership(const Binomial& f, const GroebnerBasis& gb);

// Generators of the toric ideal I_A: the kernel lattice basis ideal,
// saturated variable by variable (graded order with that variable last,
// common variable powers divided out), sweeping until stable. The result is
// presented as the reduced graded-revlex basis.
BinomialIdeal toric_ideal_generators(const Configuration& c);

// Minimal homogeneous generating set: toric generators processed in
// increasing degree, dropping anything generated by what was kept.
// Requires a homogeneous configuration.
std::vector<Binomial> minimal_binomial_generators(const Configuration& c);

} // namespace toricirc
