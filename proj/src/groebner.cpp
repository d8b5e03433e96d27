#include "toricirc/groebner.hpp"

#include "toricirc/errors.hpp"
#include "toricirc/rational.hpp"

#include <algorithm>
#include <deque>

namespace toricirc {

/////////////////////////////////////////////////////////////////////////////
// monomial orders

MonomialOrder MonomialOrder::graded_revlex(std::size_t nvars) {
    std::vector<std::size_t> perm(nvars);
    for (std::size_t i = 0; i < nvars; ++i) perm[i] = i;
    return MonomialOrder(OrderKind::GradedRevLex, std::move(perm), IntVec(nvars, Int(1)));
}

MonomialOrder MonomialOrder::graded_lex(std::size_t nvars) {
    std::vector<std::size_t> perm(nvars);
    for (std::size_t i = 0; i < nvars; ++i) perm[i] = i;
    return MonomialOrder(OrderKind::GradedLex, std::move(perm), IntVec(nvars, Int(1)));
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    std::vector<std::size_t> perm(nvars);
    for (std::size_t i = 0; i < nvars; ++i) perm[i] = i;
    return MonomialOrder(OrderKind::Lex, std::move(perm), IntVec(nvars, Int(1)));
}

MonomialOrder MonomialOrder::graded_revlex_variable_last(std::size_t nvars, std::size_t var,
                                                         IntVec weights) {
    if (var >= nvars) throw internal_error("variable index out of range for order");
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < nvars; ++i)
        if (i != var) perm.push_back(i);
    perm.push_back(var);
    if (weights.empty()) weights.assign(nvars, Int(1));
    for (const Int& w : weights)
        if (w <= 0) throw internal_error("order weights must be positive");
    return MonomialOrder(OrderKind::GradedRevLex, std::move(perm), std::move(weights));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind_ != OrderKind::Lex) {
        const Int da = dot(weights_, a), db = dot(weights_, b);
        if (da != db) return da < db ? -1 : 1;
    }
    if (kind_ == OrderKind::GradedRevLex) {
        for (std::size_t k = perm_.size(); k-- > 0;) {
            const std::size_t i = perm_[k];
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }
    for (std::size_t k = 0; k < perm_.size(); ++k) {
        const std::size_t i = perm_[k];
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

/////////////////////////////////////////////////////////////////////////////
// the binomial engine

namespace {

void check_pure(const Binomial& b) {
    for (const Int& e : b.plus)
        if (e < 0) throw internal_error("binomial engine produced a negative exponent");
    for (const Int& e : b.minus)
        if (e < 0) throw internal_error("binomial engine produced a negative exponent");
    if (b.plus == b.minus) throw internal_error("binomial engine produced a zero binomial");
}

Binomial orient(Binomial b, const MonomialOrder& ord) {
    const int c = ord.compare(b.plus, b.minus);
    if (c == 0) throw internal_error("cannot orient a zero binomial");
    if (c < 0) std::swap(b.plus, b.minus);
    return b;
}

// remainder of f modulo g under ord; nullopt means zero
std::optional<Binomial> reduce(Binomial f, const std::vector<Binomial>& g,
                               const MonomialOrder& ord) {
    f = orient(std::move(f), ord);
    // leading term first, then the tail
    bool progress = true;
    while (progress) {
        progress = false;
        for (const Binomial& gi : g) {
            if (!divides(gi.plus, f.plus)) continue;
            Monomial t = sub(f.plus, gi.plus);
            t = add(t, gi.minus);
            if (t == f.minus) return std::nullopt;
            f.plus = std::move(t);
            check_pure(f);
            f = orient(std::move(f), ord);
            progress = true;
            break;
        }
    }
    progress = true;
    while (progress) {
        progress = false;
        for (const Binomial& gi : g) {
            if (!divides(gi.plus, f.minus)) continue;
            Monomial t = sub(f.minus, gi.plus);
            t = add(t, gi.minus);
            f.minus = std::move(t); // stays strictly below the leading term
            check_pure(f);
            progress = true;
            break;
        }
    }
    return f;
}

std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g) {
    const Monomial l = monomial_lcm(f.plus, g.plus);
    Monomial a = add(sub(l, f.plus), f.minus);
    Monomial b = add(sub(l, g.plus), g.minus);
    if (a == b) return std::nullopt;
    return Binomial{std::move(a), std::move(b)};
}

bool coprime_supports(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

std::vector<Binomial> canonical_set(std::vector<Binomial> gens) {
    for (Binomial& b : gens) b = normalized(b);
    std::sort(gens.begin(), gens.end(), binomial_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

} // namespace

BinomialIdeal BinomialIdeal::make(std::vector<Binomial> gens) {
    std::vector<Binomial> kept;
    for (Binomial& b : gens) {
        if (b.plus == b.minus) continue;
        kept.push_back(std::move(b));
    }
    return BinomialIdeal{canonical_set(std::move(kept))};
}

GroebnerBasis buchberger(const BinomialIdeal& ideal, const MonomialOrder& ord) {
    std::vector<Binomial> g;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;

    auto add = [&](Binomial f) {
        f = orient(std::move(f), ord);
        check_pure(f);
        for (std::size_t i = 0; i < g.size(); ++i) pairs.emplace_back(i, g.size());
        g.push_back(std::move(f));
    };

    for (const Binomial& f : ideal.generators) {
        if (f.plus == f.minus) continue;
        auto nf = reduce(f, g, ord);
        if (nf) add(std::move(*nf));
    }
    while (!pairs.empty()) {
        const auto [i, j] = pairs.front();
        pairs.pop_front();
        if (coprime_supports(g[i].plus, g[j].plus)) continue;
        auto s = s_binomial(g[i], g[j]);
        if (!s) continue;
        check_pure(*s);
        auto nf = reduce(std::move(*s), g, ord);
        if (nf) add(std::move(*nf));
    }

    // minimalize: drop anything whose leading term another element divides
    std::vector<Binomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < g.size() && !drop; ++j) {
            if (i == j) continue;
            if (!divides(g[j].plus, g[i].plus)) continue;
            // on equal leading terms keep the earlier element
            drop = g[j].plus != g[i].plus || j < i;
        }
        if (!drop) minimal.push_back(g[i]);
    }
    // tail-reduce each element against the others
    std::vector<Binomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Binomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto nf = reduce(minimal[i], others, ord);
        if (!nf) throw internal_error("minimal basis element reduced to zero");
        reduced.push_back(std::move(*nf));
    }
    std::sort(reduced.begin(), reduced.end(), [&ord](const Binomial& x, const Binomial& y) {
        const int c = ord.compare(x.plus, y.plus);
        if (c != 0) return c < 0;
        return ord.compare(x.minus, y.minus) < 0;
    });
    return GroebnerBasis{std::move(reduced), ord, true};
}

std::optional<Binomial> normal_form(const Binomial& f, const GroebnerBasis& gb) {
    if (f.plus == f.minus) return std::nullopt;
    return reduce(f, gb.elements, gb.order);
}

bool ideal_membership(const Binomial& f, const GroebnerBasis& gb) {
    return !normal_form(f, gb).has_value();
}

/////////////////////////////////////////////////////////////////////////////
// toric generators via per-variable saturation

BinomialIdeal toric_ideal_generators(const Configuration& c) {
    const std::size_t q = c.size();
    const auto basis = kernel_lattice_basis(c.a);
    if (basis.empty()) return BinomialIdeal{};

    const auto w = positive_grading(c.a, basis);
    if (!w)
        throw precondition_error(
            "configuration admits no positive grading; toric generators are not computed");

    std::vector<Binomial> gens;
    for (const IntVec& b : basis) gens.push_back(binomial_from_vector(b));
    gens = canonical_set(std::move(gens));

    for (int sweep = 0;; ++sweep) {
        if (sweep > 50) throw internal_error("variable saturation failed to stabilize");
        const std::vector<Binomial> before = gens;
        for (std::size_t i = 0; i < q; ++i) {
            const auto ord = MonomialOrder::graded_revlex_variable_last(q, i, *w);
            const auto gb = buchberger(BinomialIdeal::make(gens), ord);
            std::vector<Binomial> next;
            for (Binomial g : gb.elements) {
                const Int k = g.plus[i] < g.minus[i] ? g.plus[i] : g.minus[i];
                if (k > 0) {
                    g.plus[i] -= k;
                    g.minus[i] -= k;
                }
                next.push_back(std::move(g));
            }
            gens = canonical_set(std::move(next));
        }
        if (gens == before) break;
    }

    const auto gb = buchberger(BinomialIdeal::make(gens), MonomialOrder::graded_revlex(q));
    return BinomialIdeal::make(gb.elements);
}

std::vector<Binomial> minimal_binomial_generators(const Configuration& c) {
    {
        // homogeneity gate lives in classify; the cheap equivalent test here
        // avoids a circular dependency
        std::vector<RatVec> rows(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) rows[j] = to_rat(c.vector(j));
        if (!solve_rational(rows, RatVec(c.size(), Rat(1))))
            throw precondition_error("minimality trimming requires a grading");
    }
    auto gens = toric_ideal_generators(c).generators;
    std::sort(gens.begin(), gens.end(), binomial_less);

    std::vector<Binomial> kept;
    const auto ord = MonomialOrder::graded_revlex(c.size());
    for (const Binomial& f : gens) {
        if (!kept.empty()) {
            const auto gb = buchberger(BinomialIdeal{kept}, ord);
            if (ideal_membership(f, gb)) continue;
        }
        kept.push_back(f);
    }
    return kept;
}

} // namespace toricirc
