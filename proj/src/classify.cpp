#include "toricirc/classify.hpp"

#include "toricirc/errors.hpp"
#include "toricirc/rational.hpp"

#include <algorithm>

namespace toricirc {

bool has_square_free_term(const Binomial& b) {
    auto square_free = [](const Monomial& m) {
        for (const Int& e : m)
            if (e > 1) return false;
        return true;
    };
    return square_free(b.plus) || square_free(b.minus);
}

bool is_balanced(const Binomial& b) {
    auto max_exp = [](const Monomial& m) {
        Int mx = 0;
        for (const Int& e : m)
            if (e > mx) mx = e;
        return mx;
    };
    return max_exp(b.plus) == max_exp(b.minus);
}

namespace {

Int max_exponent(const Monomial& m) {
    Int mx = 0;
    for (const Int& e : m)
        if (e > mx) mx = e;
    return mx;
}

// sides of an unbalanced binomial, low max first
std::pair<Monomial, Monomial> low_high_sides(const Binomial& g) {
    const Int mp = max_exponent(g.plus), mm = max_exponent(g.minus);
    if (mp == mm) throw precondition_error("connectors are defined only for unbalanced circuits");
    if (mp < mm) return {g.plus, g.minus};
    return {g.minus, g.plus};
}

bool supports_intersect(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return true;
    return false;
}

bool support_contained(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] == 0) return false;
    return true;
}

bool connector_shape(const Configuration& c, const Monomial& sq, const Monomial& other,
                     const Monomial& low, const Monomial& high) {
    if (support(sq).empty() || support(other).empty()) return false;
    for (const Int& e : sq)
        if (e > 1) return false;
    if (!support_contained(sq, low)) return false;
    if (!supports_intersect(other, high)) return false;
    return c.a.apply(sq) == c.a.apply(other); // in I_A
}

std::vector<Binomial> square_free_circuit_binomials(const std::vector<Circuit>& circuits) {
    std::vector<Binomial> out;
    for (const Circuit& g : circuits)
        if (has_square_free_term(g.binomial)) out.push_back(g.binomial);
    return out;
}

// enumerate the monomials of total degree d over q variables, lexicographic
template <typename Fn>
void for_each_monomial_rec(Monomial& m, std::size_t pos, const Int& left, Fn&& fn) {
    if (pos + 1 == m.size()) {
        m[pos] = left;
        fn(const_cast<const Monomial&>(m));
        m[pos] = 0;
        return;
    }
    for (Int e = left; e >= 0; --e) {
        m[pos] = e;
        for_each_monomial_rec(m, pos + 1, left - e, fn);
    }
    m[pos] = 0;
}

template <typename Fn>
void for_each_monomial(std::size_t q, const Int& degree, Fn&& fn) {
    Monomial m(q, Int(0));
    if (degree == 0) {
        fn(const_cast<const Monomial&>(m));
        return;
    }
    for_each_monomial_rec(m, 0, degree, fn);
}

struct ConnectorScan {
    std::optional<ConnectorCertificate> best; // witness-true preferred, else first
    bool truncated = false;
};

ConnectorScan scan_connectors(const Configuration& c, const Circuit& g, const Int& maxdeg,
                              const GroebnerBasis& square_free_gb) {
    ConnectorScan scan;
    const auto [low, high] = low_high_sides(g.binomial);
    const auto low_supp = support(low);

    std::vector<std::size_t> indices(low_supp.size());
    for (std::size_t size = 1; size <= low_supp.size(); ++size) {
        if (Int(size) > maxdeg) {
            scan.truncated = true;
            break;
        }
        // subsets of the low side, by size then lexicographic position
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        bool more = true;
        while (more) {
            Monomial sq(c.size(), Int(0));
            for (std::size_t i : pick) sq[low_supp[i]] = 1;
            const IntVec img = c.a.apply(sq);
            // partner degree is pinned to `size` by the grading
            for_each_monomial(c.size(), Int(size), [&](const Monomial& partner) {
                if (scan.best && scan.best->membership_witness) return;
                if (partner == sq) return;
                if (!supports_intersect(partner, high)) return;
                if (c.a.apply(partner) != img) return;
                Binomial cand{sq, partner};
                const bool witness = square_free_gb.elements.empty()
                                         ? false
                                         : ideal_membership(cand, square_free_gb);
                if (!scan.best || (witness && !scan.best->membership_witness))
                    scan.best = ConnectorCertificate{g, cand, witness};
            });
            if (scan.best && scan.best->membership_witness) return scan;
            // next combination
            more = false;
            for (std::size_t i = size; i-- > 0;) {
                if (pick[i] < low_supp.size() - size + i) {
                    ++pick[i];
                    for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    return scan;
}

} // namespace

bool is_connector(const Configuration& c, const Binomial& candidate, const Circuit& g) {
    const auto [low, high] = low_high_sides(g.binomial);
    return connector_shape(c, candidate.plus, candidate.minus, low, high) ||
           connector_shape(c, candidate.minus, candidate.plus, low, high);
}

std::optional<ConnectorCertificate> find_connector(const Configuration& c, const Circuit& g,
                                                   const Int& maxdeg) {
    if (!is_homogeneous(c))
        throw precondition_error("connector search requires a homogeneous configuration");
    const auto circuits = enumerate_circuits(c);
    const auto sq = square_free_circuit_binomials(circuits);
    const auto gb = buchberger(BinomialIdeal::make(sq), MonomialOrder::graded_revlex(c.size()));
    return scan_connectors(c, g, maxdeg, gb).best;
}

std::optional<RatVec> grading_functional(const Configuration& c) {
    std::vector<RatVec> rows(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) rows[j] = to_rat(c.vector(j));
    return solve_rational(rows, RatVec(c.size(), Rat(1)));
}

bool is_homogeneous(const Configuration& c) {
    return grading_functional(c).has_value();
}

namespace {

bool decompose_in_semigroup(const IntMatrix& a, IntVec rem, long count, std::size_t from,
                            bool nonneg) {
    if (count == 0) return is_zero(rem);
    if (nonneg) {
        for (const Int& x : rem)
            if (x < 0) return false;
    }
    for (std::size_t i = from; i < a.cols(); ++i) {
        IntVec next = rem;
        for (std::size_t r = 0; r < a.rows(); ++r) next[r] -= a.at(r, i);
        if (decompose_in_semigroup(a, std::move(next), count - 1, i, nonneg)) return true;
    }
    return false;
}

struct BoxScan {
    const Configuration& c;
    const RatVec& w;
    const std::vector<IntVec>& column_lattice;
    Int bound;
    bool nonneg_config;
    IntVec lo, hi;
    RatVec wmin_suffix; // least possible degree contribution of coords >= k

    std::optional<IntVec> gap;
    Int gap_degree = 0;

    bool scan(IntVec& z, std::size_t k, const Rat& partial_degree) {
        if (k == z.size()) return visit(z);
        for (Int v = lo[k]; v <= hi[k]; ++v) {
            z[k] = v;
            const Rat p = partial_degree + w[k] * Rat(v);
            if (p + wmin_suffix[k + 1] > Rat(bound)) continue;
            if (scan(z, k + 1, p)) return true;
        }
        z[k] = 0;
        return false;
    }

    bool visit(const IntVec& z) {
        if (is_zero(z)) return false;
        if (!lattice_contains(column_lattice, z)) return false;
        Rat deg = 0;
        for (std::size_t i = 0; i < z.size(); ++i) deg += w[i] * Rat(z[i]);
        if (deg <= 0 || deg > Rat(bound)) return false;
        if (deg.get_den() != 1) throw internal_error("lattice point with fractional degree");
        if (!in_cone(c.a, z)) return false;
        if (decompose_in_semigroup(c.a, z, deg.get_num().get_si(), 0, nonneg_config)) return false;
        gap = z;
        gap_degree = deg.get_num();
        return true;
    }
};

} // namespace

NormalityResult is_normal_up_to(const Configuration& c, const Int& bound) {
    const auto w = grading_functional(c);
    if (!w) throw precondition_error("normality oracle requires a homogeneous configuration");
    if (bound < 1) throw precondition_error("normality bound must be at least 1");

    const std::size_t n = c.dim();
    std::vector<IntVec> columns;
    for (std::size_t j = 0; j < c.size(); ++j) columns.push_back(c.vector(j));

    bool nonneg = true;
    for (const IntVec& v : columns)
        for (const Int& x : v)
            if (x < 0) nonneg = false;

    // any cone point of degree <= bound sits in this box
    IntVec lo(n), hi(n);
    for (std::size_t r = 0; r < n; ++r) {
        Int mn = 0, mx = 0;
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c.a.at(r, j) < mn) mn = c.a.at(r, j);
            if (c.a.at(r, j) > mx) mx = c.a.at(r, j);
        }
        lo[r] = bound * mn;
        hi[r] = bound * mx;
    }
    RatVec wmin(n + 1, Rat(0));
    for (std::size_t r = n; r-- > 0;) {
        const Rat a = (*w)[r] * Rat(lo[r]);
        const Rat b = (*w)[r] * Rat(hi[r]);
        wmin[r] = wmin[r + 1] + (a < b ? a : b);
    }

    BoxScan scan{c, *w, columns, bound, nonneg, std::move(lo), std::move(hi), std::move(wmin),
                 std::nullopt, 0};
    IntVec z(n, Int(0));
    scan.scan(z, 0, Rat(0));
    if (scan.gap) return NormalityResult{bound, false, scan.gap, scan.gap_degree};
    return NormalityResult{bound, true, std::nullopt, 0};
}

Int default_normal_bound(const Configuration& c) {
    Int mx = 1;
    for (const Circuit& g : enumerate_circuits(c)) {
        const Int d = binomial_degree(g.binomial);
        if (d > mx) mx = d;
    }
    return 2 * mx;
}

GeneratorReport check_generation_by_circuits(const Configuration& c, const Int& maxdeg) {
    if (maxdeg < 1) throw precondition_error("degree bound must be at least 1");
    GeneratorReport rep;
    rep.circuits = enumerate_circuits(c);
    rep.homogeneous = is_homogeneous(c);

    const auto ord = MonomialOrder::graded_revlex(c.size());
    rep.generators =
        rep.homogeneous ? minimal_binomial_generators(c) : toric_ideal_generators(c).generators;

    std::vector<Binomial> all_circ, sq_circ;
    for (const Circuit& g : rep.circuits) {
        all_circ.push_back(g.binomial);
        if (has_square_free_term(g.binomial)) sq_circ.push_back(g.binomial);
    }
    const auto gb_all = buchberger(BinomialIdeal::make(all_circ), ord);
    const auto gb_sq = buchberger(BinomialIdeal::make(sq_circ), ord);

    rep.cond_a = true;
    rep.cond_b = true;
    std::vector<Binomial> witnesses;
    for (const Binomial& f : rep.generators) {
        const bool in_all = !gb_all.elements.empty() && ideal_membership(f, gb_all);
        const bool in_sq = !gb_sq.elements.empty() && ideal_membership(f, gb_sq);
        if (!in_all) rep.cond_a = false;
        if (!in_sq) rep.cond_b = false;
        if (!in_all || !in_sq) witnesses.push_back(f);
    }
    if (rep.generators.empty()) {
        rep.cond_a = true; // the zero ideal is generated by the empty set
        rep.cond_b = true;
    }
    std::sort(witnesses.begin(), witnesses.end(), binomial_less);
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    rep.witnesses = std::move(witnesses);

    // condition (c): every unbalanced circuit has a connector generated by
    // the square-free-term circuits
    std::vector<const Circuit*> unbalanced;
    for (const Circuit& g : rep.circuits)
        if (!is_balanced(g.binomial)) unbalanced.push_back(&g);
    if (unbalanced.empty()) {
        rep.cond_c = TriState::Holds;
        rep.cond_c_exhaustive = true;
    } else if (!rep.homogeneous) {
        rep.cond_c = TriState::Unknown;
        rep.cond_c_exhaustive = false;
    } else {
        bool all_hold = true, any_decisive_fail = false, any_unknown = false;
        rep.cond_c_exhaustive = true;
        for (const Circuit* g : unbalanced) {
            const auto scan = scan_connectors(c, *g, maxdeg, gb_sq);
            const bool ok = scan.best && scan.best->membership_witness;
            if (ok) continue;
            all_hold = false;
            if (scan.truncated) {
                any_unknown = true;
                rep.cond_c_exhaustive = false;
            } else {
                any_decisive_fail = true;
            }
        }
        if (all_hold)
            rep.cond_c = TriState::Holds;
        else if (any_decisive_fail)
            rep.cond_c = TriState::Fails;
        else if (any_unknown)
            rep.cond_c = TriState::Unknown;
    }

    if (rep.homogeneous) rep.normal_up_to = is_normal_up_to(c, maxdeg);

    if (rep.homogeneous && rep.normal_up_to && rep.normal_up_to->normal) {
        if (rep.cond_a != rep.cond_b)
            throw internal_error("generation checker violated the (a) <-> (b) equivalence");
        if (rep.cond_c != TriState::Unknown && (rep.cond_c == TriState::Holds) != rep.cond_a)
            throw internal_error("generation checker violated the (a) <-> (c) equivalence");
    }
    return rep;
}

} // namespace toricirc
