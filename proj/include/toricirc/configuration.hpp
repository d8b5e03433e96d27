#pragma once

#include "toricirc/binomial.hpp"
#include "toricirc/matrix.hpp"

#include <string>
#include <vector>

namespace toricirc {

// An ordered list of q integer vectors in Z^n, kept as the columns of an
// n x q matrix. Columns may repeat.
struct Configuration {
    IntMatrix a;
    std::vector<std::string> names;

    Configuration() = default;
    explicit Configuration(IntMatrix m) : a(std::move(m)), names(default_names(a.cols())) {}

    std::size_t dim() const { return a.rows(); }  // n
    std::size_t size() const { return a.cols(); } // q
    IntVec vector(std::size_t j) const { return a.column(j); }
};

} // namespace toricirc
