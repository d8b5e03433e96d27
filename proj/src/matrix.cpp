#include "toricirc/matrix.hpp"

#include "toricirc/errors.hpp"

#include <fstream>
#include <sstream>

namespace toricirc {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
    if (rows.empty()) return {};
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw internal_error("ragged row list");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols) {
    if (cols.empty()) return {};
    IntMatrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows()) throw internal_error("ragged column list");
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t r) const {
    IntVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

IntVec IntMatrix::column(std::size_t c) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::columns_submatrix(const std::vector<std::size_t>& idx) const {
    IntMatrix m(rows_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t i = 0; i < rows_; ++i) m.at(i, k) = at(i, idx[k]);
    return m;
}

IntVec IntMatrix::apply(const IntVec& x) const {
    if (x.size() != cols_) throw internal_error("dimension mismatch in matrix apply");
    IntVec y(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::sub_row_multiple(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) -= q * at(j, c);
}

std::vector<std::size_t> hermite_rows(IntMatrix& m, IntMatrix* u) {
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;

    auto swap2 = [&](std::size_t i, std::size_t j) {
        m.swap_rows(i, j);
        if (u) u->swap_rows(i, j);
    };
    auto sub2 = [&](std::size_t i, std::size_t j, const Int& q) {
        m.sub_row_multiple(i, j, q);
        if (u) u->sub_row_multiple(i, j, q);
    };

    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        // gcd-chain the column until at most one nonzero entry remains below `row`
        while (true) {
            std::size_t best = nr;
            for (std::size_t i = row; i < nr; ++i) {
                if (m.at(i, col) == 0) continue;
                if (best == nr ||
                    mpz_cmpabs(m.at(i, col).get_mpz_t(), m.at(best, col).get_mpz_t()) < 0)
                    best = i;
            }
            if (best == nr) break; // no pivot in this column
            swap2(row, best);
            bool clear = true;
            for (std::size_t i = row + 1; i < nr; ++i) {
                if (m.at(i, col) == 0) continue;
                sub2(i, row, trunc_div(m.at(i, col), m.at(row, col)));
                if (m.at(i, col) != 0) clear = false;
            }
            if (clear) break;
        }
        if (m.at(row, col) == 0) continue;
        if (m.at(row, col) < 0) {
            m.negate_row(row);
            if (u) u->negate_row(row);
        }
        for (std::size_t i = 0; i < row; ++i)
            sub2(i, row, floor_div(m.at(i, col), m.at(row, col)));
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const IntMatrix& a) {
    IntMatrix m = a;
    return hermite_rows(m).size();
}

std::vector<IntVec> kernel_lattice_basis(const IntMatrix& a) {
    const std::size_t q = a.cols();
    IntMatrix m = a.transposed(); // q x n
    IntMatrix u = IntMatrix::identity(q);
    const std::size_t r = hermite_rows(m, &u).size();

    std::vector<IntVec> basis;
    for (std::size_t i = r; i < q; ++i) basis.push_back(u.row(i));
    if (basis.empty()) return basis;

    // canonicalize: the kernel lattice has a unique echelon basis
    IntMatrix b = IntMatrix::from_rows(basis);
    const std::size_t br = hermite_rows(b).size();
    if (br != basis.size()) throw internal_error("kernel basis lost rank during canonicalization");
    basis.clear();
    for (std::size_t i = 0; i < br; ++i) {
        IntVec v = b.row(i);
        // rows of a saturated kernel lattice basis are primitive; echelon
        // pivots are positive, so the sign normalization is already in place
        if (content(v) != 1) throw internal_error("kernel basis vector is not primitive");
        basis.push_back(std::move(v));
    }
    return basis;
}

bool lattice_contains(const std::vector<IntVec>& gens, const IntVec& z) {
    if (gens.empty()) return is_zero(z);
    IntMatrix m = IntMatrix::from_rows(gens);
    const std::vector<std::size_t> pivots = hermite_rows(m);
    IntVec r = z;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        const std::size_t col = pivots[k];
        if (r[col] == 0) continue;
        const Int& p = m.at(k, col);
        if (!mpz_divisible_p(r[col].get_mpz_t(), p.get_mpz_t())) return false;
        Int q;
        mpz_divexact(q.get_mpz_t(), r[col].get_mpz_t(), p.get_mpz_t());
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= q * m.at(k, j);
    }
    return is_zero(r);
}

IntMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw parse_error("matrix file is empty");

    std::istringstream head(lines.front());
    long n = 0, q = 0;
    if (!(head >> n >> q) || n < 1 || q < 1)
        throw parse_error("matrix header must be 'n q' with n, q >= 1");
    std::string extra;
    if (head >> extra) throw parse_error("trailing tokens after matrix header");
    if (lines.size() != static_cast<std::size_t>(n) + 1)
        throw parse_error("expected " + std::to_string(n) + " matrix rows, found " +
                          std::to_string(lines.size() - 1));

    IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(q));
    for (long i = 0; i < n; ++i) {
        std::istringstream rowin(lines[static_cast<std::size_t>(i) + 1]);
        for (long j = 0; j < q; ++j) {
            std::string tok;
            if (!(rowin >> tok)) throw parse_error("matrix row " + std::to_string(i + 1) + " is short");
            try {
                m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Int(tok);
            } catch (const std::invalid_argument&) {
                throw parse_error("bad integer '" + tok + "' in matrix row " + std::to_string(i + 1));
            }
        }
        std::string tok;
        if (rowin >> tok) throw parse_error("matrix row " + std::to_string(i + 1) + " is long");
    }
    return m;
}

IntMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open matrix file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

} // namespace toricirc
