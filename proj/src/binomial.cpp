#include "toricirc/binomial.hpp"

#include "toricirc/errors.hpp"

#include <sstream>

namespace toricirc {

Int total_degree(const Monomial& m) {
    Int d = 0;
    for (const Int& e : m) d += e;
    return d;
}

bool divides(const Monomial& m, const Monomial& n) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > n[i]) return false;
    return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = a[i] > b[i] ? a[i] : b[i];
    return l;
}

Binomial make_binomial(Monomial a, Monomial b) {
    if (a.size() != b.size()) throw internal_error("binomial terms of unequal length");
    const int c = lex_compare(a, b);
    if (c == 0) throw precondition_error("binomial terms must differ");
    if (c > 0) return Binomial{std::move(a), std::move(b)};
    return Binomial{std::move(b), std::move(a)};
}

Binomial binomial_from_vector(const IntVec& v) {
    Monomial p(v.size(), Int(0)), m(v.size(), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > 0)
            p[i] = v[i];
        else if (v[i] < 0)
            m[i] = -v[i];
    }
    return make_binomial(std::move(p), std::move(m));
}

IntVec binomial_difference(const Binomial& b) {
    return sub(b.plus, b.minus);
}

Binomial normalized(const Binomial& b) {
    return make_binomial(b.plus, b.minus);
}

Binomial swapped(const Binomial& b) {
    return Binomial{b.minus, b.plus};
}

Int binomial_degree(const Binomial& b) {
    const Int dp = total_degree(b.plus), dm = total_degree(b.minus);
    return dp > dm ? dp : dm;
}

bool binomial_less(const Binomial& a, const Binomial& b) {
    const Int da = binomial_degree(a), db = binomial_degree(b);
    if (da != db) return da < db;
    const int c = lex_compare(a.plus, b.plus);
    if (c != 0) return c < 0;
    return lex_compare(a.minus, b.minus) < 0;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (any) out << "*";
        out << (i < names.size() ? names[i] : "T" + std::to_string(i + 1));
        if (m[i] != 1) out << "^" << m[i].get_str();
        any = true;
    }
    if (!any) return "1";
    return out.str();
}

std::string binomial_string(const Binomial& b, const std::vector<std::string>& names) {
    return monomial_string(b.plus, names) + " - " + monomial_string(b.minus, names);
}

std::vector<std::string> default_names(std::size_t q) {
    std::vector<std::string> names(q);
    for (std::size_t i = 0; i < q; ++i) names[i] = "T" + std::to_string(i + 1);
    return names;
}

} // namespace toricirc
