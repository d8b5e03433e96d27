#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "toricirc/classify.hpp"
#include "toricirc/errors.hpp"
#include "toricirc/rational.hpp"

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

Circuit circuit_with_vector(const Configuration& c, const IntVec& v) {
    for (const Circuit& g : enumerate_circuits(c))
        if (g.vector == v) return g;
    REQUIRE(false);
    return {};
}

} // namespace

TEST_CASE("square-free term predicate") {
    CHECK(has_square_free_term(bn({1, 0, 1, 0}, {0, 1, 0, 1})));
    CHECK(!has_square_free_term(bn({2, 0, 0, 1}, {0, 3, 0, 0})));
    CHECK(has_square_free_term(bn({1, 0, 1, 0}, {0, 2, 0, 0})));
}

TEST_CASE("balanced predicate") {
    CHECK(is_balanced(bn({1, 0, 1, 0}, {0, 1, 0, 1})));
    CHECK(!is_balanced(bn({2, 0, 0, 1}, {0, 3, 0, 0})));
    // the bridge walk binomial: a1 b1^2 c1 c3 - a2 a3 b2^2 c2
    const Binomial w = walk_binomial(corpus::bridge2(), {0, 1, 3, 4, 5, 6, 7, 4, 3, 2});
    CHECK(is_balanced(w));
    CHECK(!has_square_free_term(w));
}

TEST_CASE("predicates are invariant under term swap and variable permutation") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> ed(0, 3);
    for (int t = 0; t < 200; ++t) {
        Monomial p(5), m(5);
        for (std::size_t i = 0; i < 5; ++i) {
            p[i] = ed(rng);
            m[i] = ed(rng);
        }
        if (p == m) continue;
        const Binomial b{p, m};
        CHECK(is_balanced(b) == is_balanced(swapped(b)));
        CHECK(has_square_free_term(b) == has_square_free_term(swapped(b)));
        std::vector<std::size_t> perm = {0, 1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        Monomial pp(5), pm(5);
        for (std::size_t i = 0; i < 5; ++i) {
            pp[i] = p[perm[i]];
            pm[i] = m[perm[i]];
        }
        const Binomial pb{pp, pm};
        CHECK(is_balanced(b) == is_balanced(pb));
        CHECK(has_square_free_term(b) == has_square_free_term(pb));
    }
}

TEST_CASE("connector shape checks on the twisted cubic") {
    const Configuration c = corpus::twisted_cubic();
    const Circuit g1 = circuit_with_vector(c, iv({1, -2, 1, 0}));  // T1T3 - T2^2
    const Circuit g2 = circuit_with_vector(c, iv({2, -3, 0, 1}));  // T1^2T4 - T2^3

    // an unbalanced circuit with a square-free term is a connector of itself
    CHECK(is_connector(c, g1.binomial, g1));
    // T1T4 - T2T3 connects T1^2T4 - T2^3
    CHECK(is_connector(c, bn({1, 0, 0, 1}, {0, 1, 1, 0}), g2));
    // T1T3 - T2^2 does not: its square-free support {1,3} escapes {1,4}
    CHECK(!is_connector(c, bn({1, 0, 1, 0}, {0, 2, 0, 0}), g2));

    // balanced circuits have no connectors
    const Configuration br = incidence_configuration(corpus::bridge2());
    const auto bcircs = enumerate_circuits(br);
    REQUIRE(bcircs.size() == 1);
    CHECK_THROWS_WITH_AS(is_connector(br, bcircs[0].binomial, bcircs[0]),
                         "connectors are defined only for unbalanced circuits",
                         precondition_error);
}

TEST_CASE("find_connector on the twisted cubic") {
    const Configuration c = corpus::twisted_cubic();
    const Circuit g1 = circuit_with_vector(c, iv({1, -2, 1, 0}));
    const Circuit g2 = circuit_with_vector(c, iv({2, -3, 0, 1}));

    const auto r1 = find_connector(c, g1, 4);
    REQUIRE(r1.has_value());
    CHECK(r1->connector == g1.binomial);
    CHECK(r1->membership_witness);

    const auto r2 = find_connector(c, g2, 4);
    REQUIRE(r2.has_value());
    CHECK(normalized(r2->connector) == bn({1, 0, 0, 1}, {0, 1, 1, 0}));
    CHECK(!r2->membership_witness);
    CHECK(is_connector(c, r2->connector, g2));

    const Configuration br = incidence_configuration(corpus::bridge2());
    const auto bcircs = enumerate_circuits(br);
    CHECK_THROWS_AS(find_connector(br, bcircs[0], 4), precondition_error);
}

TEST_CASE("homogeneity") {
    CHECK(is_homogeneous(corpus::twisted_cubic()));
    for (const auto& [name, g] : corpus::graph_corpus()) {
        INFO(name);
        CHECK(is_homogeneous(incidence_configuration(g)));
    }
    CHECK(!is_homogeneous(config(2, 2, {1, 2, 0, 0})));
}

TEST_CASE("normality oracle") {
    SUBCASE("twisted cubic is normal up to degree 5") {
        const auto r = is_normal_up_to(corpus::twisted_cubic(), 5);
        CHECK(r.normal);
        CHECK(!r.witness.has_value());
    }
    SUBCASE("the bridge graph has the expected gap witness") {
        const auto r = is_normal_up_to(incidence_configuration(corpus::bridge2()), 4);
        CHECK(!r.normal);
        REQUIRE(r.witness.has_value());
        CHECK(*r.witness == iv({1, 1, 1, 0, 1, 1, 1}));
        CHECK(r.witness_degree == 3);
    }
    SUBCASE("4-cycle is normal up to degree 4") {
        const auto r = is_normal_up_to(incidence_configuration(corpus::c4()), 4);
        CHECK(r.normal);
    }
    SUBCASE("non-homogeneous input is rejected") {
        CHECK_THROWS_AS(is_normal_up_to(config(2, 2, {1, 2, 0, 0}), 4), precondition_error);
    }
}

TEST_CASE("normality witnesses are genuine gaps") {
    // whatever the oracle reports sits in the lattice and the cone but not
    // in the semigroup slice it scanned
    const Configuration c = incidence_configuration(corpus::bridge2());
    const auto r = is_normal_up_to(c, 4);
    REQUIRE(r.witness.has_value());
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < c.size(); ++j) cols.push_back(c.vector(j));
    CHECK(lattice_contains(cols, *r.witness));
    CHECK(in_cone(c.a, *r.witness));
    CHECK(oracles::in_cone_caratheodory(c.a, *r.witness));
}

TEST_CASE("default normal bound is twice the top circuit degree") {
    CHECK(default_normal_bound(incidence_configuration(corpus::bridge2())) == 10);
    CHECK(default_normal_bound(corpus::twisted_cubic()) == 6);
}

TEST_CASE("generation report: 4-cycle") {
    const auto rep = check_generation_by_circuits(incidence_configuration(corpus::c4()), 4);
    CHECK(rep.homogeneous);
    CHECK(rep.cond_a);
    CHECK(rep.cond_b);
    CHECK(rep.cond_c == TriState::Holds);
    REQUIRE(rep.normal_up_to.has_value());
    CHECK(rep.normal_up_to->normal);
    CHECK(rep.witnesses.empty());
}

TEST_CASE("generation report: twisted cubic") {
    const auto rep = check_generation_by_circuits(corpus::twisted_cubic(), 4);
    CHECK(rep.homogeneous);
    CHECK(!rep.cond_a);
    CHECK(!rep.cond_b);
    CHECK(rep.cond_c == TriState::Fails);
    CHECK(rep.cond_c_exhaustive);
    REQUIRE(rep.normal_up_to.has_value());
    CHECK(rep.normal_up_to->normal);
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0] == bn({1, 0, 0, 1}, {0, 1, 1, 0}));
}

TEST_CASE("generation report: bridge graph separates (a) from (b)") {
    const auto rep =
        check_generation_by_circuits(incidence_configuration(corpus::bridge2()), 4);
    CHECK(rep.homogeneous);
    CHECK(rep.cond_a);
    CHECK(!rep.cond_b);
    CHECK(rep.cond_c == TriState::Holds); // the only circuit is balanced
    REQUIRE(rep.normal_up_to.has_value());
    CHECK(!rep.normal_up_to->normal);
}

TEST_CASE("equivalence of (a), (b), (c) on homogeneous normal corpus members") {
    for (const auto& [name, c] : corpus::matrix_corpus()) {
        INFO(name);
        const auto rep = check_generation_by_circuits(c, 4);
        if (!rep.homogeneous || !rep.normal_up_to || !rep.normal_up_to->normal) continue;
        CHECK(rep.cond_a == rep.cond_b);
        if (rep.cond_c != TriState::Unknown)
            CHECK((rep.cond_c == TriState::Holds) == rep.cond_a);
    }
}

TEST_CASE("balanced non-square-free circuits force square-free generation") {
    // homogeneous + normal up to the bound + every non-square-free circuit
    // balanced forces generation by square-free-term circuits
    for (const auto& [name, c] : corpus::matrix_corpus()) {
        INFO(name);
        const auto rep = check_generation_by_circuits(c, 4);
        if (!rep.homogeneous || !rep.normal_up_to || !rep.normal_up_to->normal) continue;
        bool hypothesis = true;
        for (const Circuit& g : rep.circuits)
            if (!has_square_free_term(g.binomial) && !is_balanced(g.binomial)) hypothesis = false;
        if (hypothesis) CHECK(rep.cond_b);
    }
}

TEST_CASE("all-square-free circuits force normality and generation") {
    // nonnegative homogeneous configurations whose circuits all carry a
    // square-free term are normal and generated by those circuits
    for (const auto& [name, c] : corpus::matrix_corpus()) {
        INFO(name);
        bool nonneg = true;
        for (std::size_t j = 0; j < c.size(); ++j)
            for (std::size_t i = 0; i < c.dim(); ++i)
                if (c.a.at(i, j) < 0) nonneg = false;
        if (!nonneg || !is_homogeneous(c)) continue;
        bool all_sqfree = true;
        for (const Circuit& g : enumerate_circuits(c))
            if (!has_square_free_term(g.binomial)) all_sqfree = false;
        if (!all_sqfree) continue;
        const auto rep = check_generation_by_circuits(c, 4);
        REQUIRE(rep.normal_up_to.has_value());
        CHECK(rep.normal_up_to->normal);
        CHECK(rep.cond_b);
    }
}

TEST_CASE("unbalanced square-free circuits connect themselves") {
    for (const auto& [name, c] : corpus::matrix_corpus()) {
        for (const Circuit& g : enumerate_circuits(c)) {
            if (is_balanced(g.binomial) || !has_square_free_term(g.binomial)) continue;
            CHECK(is_connector(c, g.binomial, g));
        }
    }
}

TEST_CASE("non-homogeneous configurations still get a report") {
    const Configuration c = config(1, 2, {1, 2}); // T1^2 - T2 is the whole story
    const auto rep = check_generation_by_circuits(c, 4);
    CHECK(!rep.homogeneous);
    CHECK(!rep.normal_up_to.has_value());
    CHECK(rep.cond_a);
    REQUIRE(rep.generators.size() == 1);
    CHECK(rep.generators[0] == bn({2, 0}, {0, 1}));
}
