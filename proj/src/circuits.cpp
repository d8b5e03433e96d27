#include "toricirc/circuits.hpp"

#include "toricirc/errors.hpp"

#include <algorithm>

namespace toricirc {

namespace {

bool next_combination(std::vector<std::size_t>& s, std::size_t q) {
    const std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] < q - k + i) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool contains_sorted(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool in_harmony(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) * sgn(b[i]) < 0) return false;
    return true;
}

bool support_inside(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] == 0) return false;
    return true;
}

} // namespace

std::vector<Circuit> enumerate_circuits(const Configuration& c) {
    const std::size_t q = c.size();
    const std::size_t r = rank(c.a);
    std::vector<std::vector<std::size_t>> found_supports;
    std::vector<Circuit> out;

    const std::size_t max_size = std::min(q, r + 1);
    for (std::size_t s = 1; s <= max_size; ++s) {
        std::vector<std::size_t> subset(s);
        for (std::size_t i = 0; i < s; ++i) subset[i] = i;
        do {
            bool pruned = false;
            for (const auto& fs : found_supports)
                if (contains_sorted(subset, fs)) { pruned = true; break; }
            if (pruned) continue;

            const IntMatrix sub = c.a.columns_submatrix(subset);
            if (rank(sub) == s) continue; // independent columns

            // minimal dependent by pruning, so the kernel is one-dimensional
            auto ker = kernel_lattice_basis(sub);
            if (ker.size() != 1)
                throw internal_error("minimal dependent set with kernel dimension != 1");
            IntVec v(q, Int(0));
            for (std::size_t i = 0; i < s; ++i) {
                if (ker[0][i] == 0)
                    throw internal_error("circuit vector does not cover its support");
                v[subset[i]] = ker[0][i];
            }
            out.push_back(Circuit{v, binomial_from_vector(v)});
            found_supports.push_back(subset);
        } while (next_combination(subset, q));
    }

    std::sort(out.begin(), out.end(), [](const Circuit& x, const Circuit& y) {
        const auto sx = support(x.vector), sy = support(y.vector);
        if (sx.size() != sy.size()) return sx.size() < sy.size();
        if (sx != sy) return sx < sy;
        return lex_compare(x.vector, y.vector) < 0;
    });
    return out;
}

Circuit harmonious_circuit(const Configuration& c, const IntVec& alpha) {
    if (alpha.size() != c.size())
        throw precondition_error("vector length does not match the configuration");
    if (is_zero(alpha))
        throw precondition_error("harmony search needs a nonzero kernel vector");
    if (!is_zero(c.a.apply(alpha)))
        throw precondition_error("vector is not in the kernel of the configuration");

    for (const Circuit& circ : enumerate_circuits(c)) {
        for (int s = 0; s < 2; ++s) {
            IntVec g = s == 0 ? circ.vector : negated(circ.vector);
            if (in_harmony(g, alpha) && support_inside(g, alpha)) {
                Monomial p(g.size(), Int(0)), m(g.size(), Int(0));
                for (std::size_t i = 0; i < g.size(); ++i) {
                    if (g[i] > 0) p[i] = g[i];
                    if (g[i] < 0) m[i] = -g[i];
                }
                return Circuit{std::move(g), Binomial{std::move(p), std::move(m)}};
            }
        }
    }
    throw internal_error("no circuit in harmony with a kernel vector");
}

std::set<std::vector<std::size_t>> matroid_circuit_supports(const Configuration& c) {
    std::set<std::vector<std::size_t>> out;
    for (const Circuit& circ : enumerate_circuits(c)) out.insert(support(circ.vector));
    return out;
}

bool is_circuit(const Configuration& c, const Binomial& b) {
    if (b.plus.size() != c.size() || b.minus.size() != c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (b.plus[i] > 0 && b.minus[i] > 0) return false; // terms must be coprime
    const IntVec d = binomial_difference(b);
    if (is_zero(d)) return false;
    if (!is_zero(c.a.apply(d))) return false;
    if (content(d) != 1) return false;

    const auto s = support(d);
    const IntMatrix sub = c.a.columns_submatrix(s);
    if (rank(sub) != s.size() - 1) return false;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<std::size_t> t;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) t.push_back(s[i]);
        if (rank(c.a.columns_submatrix(t)) != t.size()) return false;
    }
    return true;
}

} // namespace toricirc
