#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "toricirc/circuits.hpp"
#include "toricirc/errors.hpp"

#include <algorithm>
#include <random>

using namespace toricirc;

namespace {

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Binomial bn(std::initializer_list<long> plus, std::initializer_list<long> minus) {
    return Binomial{iv(plus), iv(minus)};
}

Configuration config(std::size_t n, std::size_t q, std::initializer_list<long> entries) {
    IntMatrix m(n, q);
    auto it = entries.begin();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < q; ++j) m.at(i, j) = *it++;
    return Configuration(std::move(m));
}

} // namespace

TEST_CASE("circuits of the 4-cycle") {
    const Configuration c = incidence_configuration(corpus::c4());
    const auto circuits = enumerate_circuits(c);
    REQUIRE(circuits.size() == 1);
    CHECK(circuits[0].vector == iv({1, -1, 1, -1}));
    CHECK(circuits[0].binomial == bn({1, 0, 1, 0}, {0, 1, 0, 1}));
}

TEST_CASE("circuits of the twisted cubic") {
    const auto circuits = enumerate_circuits(corpus::twisted_cubic());
    REQUIRE(circuits.size() == 4);
    CHECK(circuits[0].vector == iv({1, -2, 1, 0}));
    CHECK(circuits[1].vector == iv({2, -3, 0, 1}));
    CHECK(circuits[2].vector == iv({1, 0, -3, 2}));
    CHECK(circuits[3].vector == iv({0, 1, -2, 1}));
    CHECK(circuits[0].binomial == bn({1, 0, 1, 0}, {0, 2, 0, 0}));
    CHECK(circuits[1].binomial == bn({2, 0, 0, 1}, {0, 3, 0, 0}));
    CHECK(circuits[2].binomial == bn({1, 0, 0, 2}, {0, 0, 3, 0}));
    CHECK(circuits[3].binomial == bn({0, 1, 0, 1}, {0, 0, 2, 0}));
}

TEST_CASE("identity columns have no circuits") {
    CHECK(enumerate_circuits(Configuration(IntMatrix::identity(3))).empty());
}

TEST_CASE("matroid circuit supports") {
    const auto tc = matroid_circuit_supports(corpus::twisted_cubic());
    const std::set<std::vector<std::size_t>> expect = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    CHECK(tc == expect);

    // two parallel edges give the repeated-column pair
    const auto pp = matroid_circuit_supports(incidence_configuration(corpus::parallel_pair()));
    CHECK(pp == std::set<std::vector<std::size_t>>{{0, 1}});

    CHECK(matroid_circuit_supports(Configuration(IntMatrix::identity(4))).empty());
}

TEST_CASE("circuit supports equal the brute-force minimal dependent sets") {
    std::mt19937 rng(23);
    for (int t = 0; t < 60; ++t) {
        std::uniform_int_distribution<std::size_t> nd(1, 5), qd(1, 7);
        const Configuration c(oracles::random_matrix(rng, nd(rng), qd(rng), -2, 2));
        CHECK(matroid_circuit_supports(c) == oracles::minimal_dependent_subsets(c.a));
    }
    for (const auto& [name, c] : corpus::matrix_corpus()) {
        INFO(name);
        CHECK(matroid_circuit_supports(c) == oracles::minimal_dependent_subsets(c.a));
    }
}

TEST_CASE("enumerated circuits are primitive support-minimal kernel vectors") {
    for (const auto& [name, c] : corpus::matrix_corpus()) {
        INFO(name);
        const std::size_t r = rank(c.a);
        for (const Circuit& g : enumerate_circuits(c)) {
            CHECK(is_zero(c.a.apply(g.vector)));
            CHECK(content(g.vector) == 1);
            CHECK(support(g.vector).size() <= r + 1);
            // every proper sub-support misses the kernel
            const auto s = support(g.vector);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<std::size_t> t;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) t.push_back(s[i]);
                if (t.empty()) continue;
                CHECK(kernel_lattice_basis(c.a.columns_submatrix(t)).empty());
            }
            // terms of the realization are coprime
            for (std::size_t i = 0; i < c.size(); ++i)
                CHECK(!(g.binomial.plus[i] > 0 && g.binomial.minus[i] > 0));
        }
    }
}

TEST_CASE("circuit count is invariant under column permutation and negation") {
    std::mt19937 rng(29);
    for (int t = 0; t < 25; ++t) {
        std::uniform_int_distribution<std::size_t> nd(2, 4), qd(2, 6);
        const Configuration c(oracles::random_matrix(rng, nd(rng), qd(rng), -2, 2));
        const auto base = enumerate_circuits(c);

        std::vector<std::size_t> perm(c.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        IntMatrix pm(c.dim(), c.size());
        for (std::size_t j = 0; j < c.size(); ++j)
            for (std::size_t i = 0; i < c.dim(); ++i) pm.at(i, j) = c.a.at(i, perm[j]);
        CHECK(enumerate_circuits(Configuration(pm)).size() == base.size());

        std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
        IntMatrix nm = c.a;
        const std::size_t col = pick(rng);
        for (std::size_t i = 0; i < c.dim(); ++i) nm.at(i, col) = -nm.at(i, col);
        CHECK(enumerate_circuits(Configuration(nm)).size() == base.size());
    }
}

TEST_CASE("harmonious circuit: twisted cubic example") {
    const Configuration c = corpus::twisted_cubic();
    const Circuit g = harmonious_circuit(c, iv({1, -1, -1, 1}));
    CHECK(g.vector == iv({2, -3, 0, 1}));
}

TEST_CASE("harmonious circuit: scaling and identity cases") {
    const Configuration c = incidence_configuration(corpus::c4());
    CHECK(harmonious_circuit(c, iv({2, -2, 2, -2})).vector == iv({1, -1, 1, -1}));
    CHECK(harmonious_circuit(c, iv({1, -1, 1, -1})).vector == iv({1, -1, 1, -1}));
    // a negated circuit comes back negated, in harmony with the input
    CHECK(harmonious_circuit(c, iv({-1, 1, -1, 1})).vector == iv({-1, 1, -1, 1}));
}

TEST_CASE("harmonious circuit: errors") {
    const Configuration c = incidence_configuration(corpus::c4());
    CHECK_THROWS_AS(harmonious_circuit(c, iv({0, 0, 0, 0})), precondition_error);
    CHECK_THROWS_AS(harmonious_circuit(c, iv({1, 0, 0, 0})), precondition_error);
}

TEST_CASE("harmonious circuit satisfies harmony and support containment") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coeff(-3, 3);
    int done = 0;
    auto cs = corpus::matrix_corpus();
    while (done < 100) {
        const Configuration& c = cs[static_cast<std::size_t>(done) % cs.size()].config;
        const auto basis = kernel_lattice_basis(c.a);
        IntVec alpha(c.size(), Int(0));
        for (const IntVec& b : basis) {
            const int k = coeff(rng);
            for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] += k * b[i];
        }
        if (is_zero(alpha)) continue;
        const Circuit g = harmonious_circuit(c, alpha);
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            CHECK(sgn(g.vector[i]) * sgn(alpha[i]) >= 0);
            if (g.vector[i] != 0) CHECK(alpha[i] != 0);
        }
        ++done;
    }
}

TEST_CASE("is_circuit") {
    const Configuration c4 = incidence_configuration(corpus::c4());
    CHECK(is_circuit(c4, bn({1, 0, 1, 0}, {0, 1, 0, 1})));

    const Configuration tc = corpus::twisted_cubic();
    // support {1,2,3,4} properly contains the support {1,2,3} of a kernel vector
    CHECK(!is_circuit(tc, bn({1, 0, 0, 1}, {0, 1, 1, 0})));
    // overlapping term supports fail the gcd condition
    CHECK(!is_circuit(tc, bn({2, 0, 1, 0}, {1, 2, 0, 0})));
    // non-primitive multiples are not circuits
    CHECK(!is_circuit(c4, bn({2, 0, 2, 0}, {0, 2, 0, 2})));
    // every enumerated circuit passes
    for (const auto& [name, c] : corpus::matrix_corpus())
        for (const Circuit& g : enumerate_circuits(c)) CHECK(is_circuit(c, g.binomial));
}

TEST_CASE("single zero column is a loop of the matroid") {
    const Configuration c = config(2, 3, {1, 0, 0, 0, 1, 0});
    const auto circuits = enumerate_circuits(c);
    REQUIRE(circuits.size() == 1);
    CHECK(circuits[0].vector == iv({0, 0, 1}));
}
