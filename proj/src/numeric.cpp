#include "toricirc/numeric.hpp"

#include "toricirc/errors.hpp"

namespace toricirc {

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int trunc_div(const Int& a, const Int& b) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

std::vector<std::size_t> support(const IntVec& v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(i);
    return s;
}

Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v)
        if (x != 0) g = gcd_int(g, x);
    return g;
}

IntVec sign_normalized(IntVec v) {
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
    return v;
}

IntVec negated(IntVec v) {
    for (Int& x : v) x = -x;
    return v;
}

IntVec primitive_part(const IntVec& v) {
    Int g = content(v);
    if (g == 0) throw precondition_error("zero vector has no primitive part");
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return sign_normalized(std::move(out));
}

int lex_compare(const IntVec& a, const IntVec& b) {
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

} // namespace toricirc
