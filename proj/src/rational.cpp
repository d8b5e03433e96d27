#include "toricirc/rational.hpp"

#include "toricirc/errors.hpp"

namespace toricirc {

RatVec to_rat(const IntVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

namespace {

// Gaussian elimination on [m | rhs...]; returns pivot (row, col) pairs.
// Works in place, rows may be swapped and scaled.
std::vector<std::pair<std::size_t, std::size_t>> eliminate(std::vector<RatVec>& rows) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    if (rows.empty()) return pivots;
    const std::size_t nc = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < rows.size(); ++c) {
        std::size_t p = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][c] != 0) { p = i; break; }
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Rat inv = 1 / rows[r][c];
        for (std::size_t j = c; j < nc; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rat f = rows[i][c];
            for (std::size_t j = c; j < nc; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

} // namespace

std::optional<RatVec> solve_rational(const std::vector<RatVec>& m, const RatVec& rhs) {
    if (m.size() != rhs.size()) throw internal_error("rational solve: shape mismatch");
    if (m.empty()) return RatVec{};
    const std::size_t nv = m.front().size();
    std::vector<RatVec> rows(m.size(), RatVec(nv + 1));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < nv; ++j) rows[i][j] = m[i][j];
        rows[i][nv] = rhs[i];
    }
    auto pivots = eliminate(rows);
    // inconsistent iff a pivot lands in the rhs column
    for (auto [r, c] : pivots)
        if (c == nv) return std::nullopt;
    RatVec x(nv, Rat(0));
    for (auto [r, c] : pivots) x[c] = rows[r][nv];
    return x;
}

std::vector<RatVec> rational_nullspace(const std::vector<RatVec>& m) {
    if (m.empty()) return {};
    const std::size_t nv = m.front().size();
    std::vector<RatVec> rows = m;
    auto pivots = eliminate(rows);
    std::vector<bool> is_pivot(nv, false);
    for (auto [r, c] : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < nv; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(nv, Rat(0));
        v[f] = 1;
        for (auto [r, c] : pivots) v[c] = -rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> fourier_motzkin(std::vector<LinearInequality> system, std::size_t nvars) {
    if (nvars == 0) {
        for (const auto& q : system)
            if (q.constant < 0) return std::nullopt;
        return RatVec{};
    }
    const std::size_t k = nvars - 1;
    std::vector<LinearInequality> rest;
    // lower: x_k >= expr; upper: x_k <= expr, expr over the remaining vars
    std::vector<LinearInequality> lowers, uppers;
    for (auto& q : system) {
        const Rat c = q.coeffs[k];
        LinearInequality e;
        e.coeffs.assign(q.coeffs.begin(), q.coeffs.begin() + static_cast<long>(k));
        e.constant = q.constant;
        if (c == 0) {
            rest.push_back(std::move(e));
            continue;
        }
        // coeffs.x + c*x_k + const >= 0  ->  x_k >=/<= -(coeffs.x + const)/c
        const Rat inv = -1 / c;
        for (auto& t : e.coeffs) t *= inv;
        e.constant *= inv;
        if (c > 0)
            lowers.push_back(std::move(e));
        else
            uppers.push_back(std::move(e));
    }
    std::vector<LinearInequality> next = rest;
    for (const auto& lo : lowers) {
        for (const auto& up : uppers) {
            LinearInequality q;
            q.coeffs.resize(k);
            for (std::size_t j = 0; j < k; ++j) q.coeffs[j] = up.coeffs[j] - lo.coeffs[j];
            q.constant = up.constant - lo.constant;
            next.push_back(std::move(q));
        }
    }
    auto inner = fourier_motzkin(std::move(next), k);
    if (!inner) return std::nullopt;
    auto eval = [&](const LinearInequality& e) {
        Rat v = e.constant;
        for (std::size_t j = 0; j < k; ++j) v += e.coeffs[j] * (*inner)[j];
        return v;
    };
    bool has_lo = false, has_hi = false;
    Rat lo, hi;
    for (const auto& e : lowers) {
        const Rat v = eval(e);
        if (!has_lo || v > lo) lo = v;
        has_lo = true;
    }
    for (const auto& e : uppers) {
        const Rat v = eval(e);
        if (!has_hi || v < hi) hi = v;
        has_hi = true;
    }
    Rat xk = 0;
    if (has_lo && has_hi) {
        if (lo > hi) throw internal_error("feasible system produced an empty interval");
        xk = (lo + hi) / 2;
    } else if (has_lo) {
        xk = lo;
    } else if (has_hi) {
        xk = hi;
    }
    RatVec out = *inner;
    out.push_back(xk);
    return out;
}

bool in_cone(const IntMatrix& a, const IntVec& z) {
    if (z.size() != a.rows()) throw internal_error("in_cone: dimension mismatch");
    std::vector<RatVec> rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows[i] = to_rat(a.row(i));
    auto part = solve_rational(rows, to_rat(z));
    if (!part) return false;
    auto null = rational_nullspace(rows);
    if (null.empty()) {
        for (const Rat& x : *part)
            if (x < 0) return false;
        return true;
    }
    // x = part + N t must be >= 0 componentwise
    std::vector<LinearInequality> sys;
    for (std::size_t i = 0; i < a.cols(); ++i) {
        LinearInequality q;
        q.coeffs.resize(null.size());
        for (std::size_t kk = 0; kk < null.size(); ++kk) q.coeffs[kk] = null[kk][i];
        q.constant = (*part)[i];
        sys.push_back(std::move(q));
    }
    return fourier_motzkin(std::move(sys), null.size()).has_value();
}

std::optional<IntVec> positive_grading(const IntMatrix& a, const std::vector<IntVec>& kernel_basis) {
    const std::size_t q = a.cols();
    {
        IntVec ones(q, Int(1));
        bool ok = true;
        for (const IntVec& b : kernel_basis)
            if (dot(ones, b) != 0) { ok = false; break; }
        if (ok) return ones;
    }
    // w = lambda . R over a row space basis R, subject to w_j >= 1
    std::vector<RatVec> rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows[i] = to_rat(a.row(i));
    auto pivots = eliminate(rows);
    std::vector<RatVec> rbasis;
    for (auto [r, c] : pivots) rbasis.push_back(rows[r]);
    if (rbasis.empty()) return std::nullopt;

    std::vector<LinearInequality> sys;
    for (std::size_t j = 0; j < q; ++j) {
        LinearInequality e;
        e.coeffs.resize(rbasis.size());
        for (std::size_t kk = 0; kk < rbasis.size(); ++kk) e.coeffs[kk] = rbasis[kk][j];
        e.constant = -1; // sum_k lambda_k R[k][j] >= 1
        sys.push_back(std::move(e));
    }
    auto lambda = fourier_motzkin(std::move(sys), rbasis.size());
    if (!lambda) return std::nullopt;

    RatVec w(q, Rat(0));
    for (std::size_t kk = 0; kk < rbasis.size(); ++kk)
        for (std::size_t j = 0; j < q; ++j) w[j] += (*lambda)[kk] * rbasis[kk][j];
    Int den = 1;
    for (const Rat& x : w) {
        Int l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        den = l;
    }
    IntVec out(q);
    for (std::size_t j = 0; j < q; ++j) {
        Rat s = w[j] * Rat(den);
        if (s.get_den() != 1) throw internal_error("grading scaling failed");
        out[j] = s.get_num();
        if (out[j] <= 0) throw internal_error("grading witness is not positive");
    }
    return out;
}

} // namespace toricirc
