#pragma once

#include "toricirc/numeric.hpp"

#include <string>
#include <vector>

namespace toricirc {

// Dense integer matrix, row-major. Columns play the role of configuration
// vectors throughout the library.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows);
    static IntMatrix from_columns(const std::vector<IntVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVec row(std::size_t r) const;
    IntVec column(std::size_t c) const;
    IntMatrix transposed() const;
    IntMatrix columns_submatrix(const std::vector<std::size_t>& idx) const;

    // A * x
    IntVec apply(const IntVec& x) const;

    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    // row i -= q * row j
    void sub_row_multiple(std::size_t i, std::size_t j, const Int& q);

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    IntVec data_;
};

// In-place integer row echelon form via unimodular row operations (swap,
// negate, add integer multiples). Pivots are positive and entries above each
// pivot are reduced into [0, pivot). Returns the pivot columns in order.
// When `transform` is non-null it must be an identity of matching row count
// and receives the same operations.
std::vector<std::size_t> hermite_rows(IntMatrix& m, IntMatrix* transform = nullptr);

std::size_t rank(const IntMatrix& a);

// Basis of ker(A) over the integers, as a lattice: every integer kernel
// vector is an integer combination of the result. Vectors are primitive and
// sign-normalized; the list is empty iff the kernel is zero. Output is the
// canonical echelon basis of the kernel lattice, so it does not depend on
// elimination order.
std::vector<IntVec> kernel_lattice_basis(const IntMatrix& a);

// Membership of z in the lattice spanned by `gens` (as row vectors).
bool lattice_contains(const std::vector<IntVec>& gens, const IntVec& z);

// Text format: optional '#' comment lines, then "n q", then n rows of q
// whitespace-separated integers.
IntMatrix parse_matrix(const std::string& text);
IntMatrix load_matrix(const std::string& path);

} // namespace toricirc
