#include <doctest.h>

#include "coxspin/linalg.hpp"
#include "coxspin/polynomial.hpp"
#include "coxspin/rng.hpp"

using namespace coxspin;

namespace {

Polynomial pvarbl(const char* name) { return Polynomial::variable(Var::intern(name)); }

Polynomial random_poly(Rng& rng, const std::vector<Var>& vars, int max_terms, int max_exp) {
    Polynomial p;
    int terms = static_cast<int>(rng.uniform(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (Var v : vars) {
            int e = static_cast<int>(rng.uniform(0, max_exp));
            if (e > 0) m = m * Monomial::of(v, e);
        }
        p.add_term(Rational(rng.uniform(-9, 9)), m);
    }
    return p;
}

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(to_string(make_rational(-6, 4)) == "-3/2");
    CHECK(rational_from_string("7/3") == make_rational(7, 3));
    CHECK(rational_from_string("-5") == Rational(-5));
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("polynomial product basics") {
    auto x = pvarbl("x"), y = pvarbl("y");

    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x * y) * Polynomial() == Polynomial());

    auto x1 = pvarbl("x1"), x2 = pvarbl("x2"), X1 = pvarbl("X1"), X2 = pvarbl("X2");
    Polynomial b = x1 * X2 - x2 * X1;
    Polynomial expect =
        x1 * x1 * X2 * X2 - x1 * x2 * X1 * X2 * Rational(2) + x2 * x2 * X1 * X1;
    CHECK(b * b == expect);
}

TEST_CASE("substitution") {
    auto x = Var::intern("x");
    auto y = pvarbl("y");
    Polynomial x2 = Polynomial::variable(x) * Polynomial::variable(x);

    SUBCASE("expansion") {
        Polynomial res = substitute(x2, {{x, y + Polynomial(Rational(1))}});
        CHECK(res == y * y + y * Rational(2) + Polynomial(Rational(1)));
    }
    SUBCASE("chart specialization of a 2x2 minor") {
        auto X1 = Var::intern("X1"), X2 = Var::intern("X2");
        Polynomial x12 = Polynomial::variable(X1) * pvarbl("x2") -
                         Polynomial::variable(X2) * pvarbl("x1");
        Polynomial res = substitute(
            x12, {{X1, Polynomial(Rational(1))}, {X2, Polynomial(Rational(1))}});
        CHECK(res == pvarbl("x2") - pvarbl("x1"));
    }
    SUBCASE("empty bindings are the identity") {
        Polynomial p = x2 + y;
        CHECK(substitute(p, {}) == p);
    }
    SUBCASE("cyclic bindings rejected") {
        CHECK_THROWS_AS(substitute(x2, {{x, Polynomial::variable(x) + y}}),
                        std::invalid_argument);
    }
    SUBCASE("composition on disjoint domains") {
        Rng rng(11);
        std::vector<Var> vars{Var::intern("u"), Var::intern("v"), Var::intern("w")};
        for (int trial = 0; trial < 20; ++trial) {
            Polynomial p = random_poly(rng, vars, 5, 3);
            std::map<Var, Polynomial> sigma{{vars[0], random_poly(rng, {vars[2]}, 3, 2)}};
            std::map<Var, Polynomial> tau{{vars[1], random_poly(rng, {vars[2]}, 3, 2)}};
            std::map<Var, Polynomial> both = sigma;
            both.insert(tau.begin(), tau.end());
            CHECK(substitute(substitute(p, sigma), tau) == substitute(p, both));
        }
    }
}

TEST_CASE("epsilon order") {
    auto eps = Var::intern("eps");
    auto x = pvarbl("x");
    Polynomial e = Polynomial::variable(eps);

    CHECK(epsilon_order(e * e * x + e * e * e, eps) == 2);
    CHECK(epsilon_order(x + e, eps) == 0);
    CHECK(!epsilon_order(Polynomial(), eps).has_value());
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(7);
    std::vector<Var> vars{Var::intern("a"), Var::intern("b"), Var::intern("c")};
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial p = random_poly(rng, vars, 4, 3);
        Polynomial q = random_poly(rng, vars, 4, 3);
        Polynomial r = random_poly(rng, vars, 4, 3);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == Polynomial());
    }
}

TEST_CASE("kernel and rank") {
    SUBCASE("rank-one 2x2") {
        RationalMatrix m(2, 2);
        m.at(0, 0) = 1;
        m.at(0, 1) = 2;
        m.at(1, 0) = 2;
        m.at(1, 1) = 4;
        auto res = kernel_and_rank(m);
        CHECK(res.rank == 1);
        REQUIRE(res.kernel.size() == 1);
        // (-2, 1) up to scale
        const auto& v = res.kernel[0];
        CHECK(v[0] * Rational(1) == v[1] * Rational(-2));
    }
    SUBCASE("identity") {
        RationalMatrix m(3, 3);
        for (int i = 0; i < 3; ++i) m.at(i, i) = 1;
        auto res = kernel_and_rank(m);
        CHECK(res.rank == 3);
        CHECK(res.kernel.empty());
    }
    SUBCASE("zero matrix") {
        RationalMatrix m(2, 5);
        auto res = kernel_and_rank(m);
        CHECK(res.rank == 0);
        CHECK(res.kernel.size() == 5);
    }
    SUBCASE("two pivoting strategies agree; kernels annihilate") {
        Rng rng(3);
        for (int trial = 0; trial < 30; ++trial) {
            size_t r = static_cast<size_t>(rng.uniform(1, 6));
            size_t c = static_cast<size_t>(rng.uniform(1, 6));
            RationalMatrix m(r, c);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < c; ++j)
                    m.at(i, j) = make_rational(rng.uniform(-6, 6), rng.uniform(1, 4));
            auto res = kernel_and_rank(m);
            CHECK(res.rank == rank_rational(m));
            CHECK(res.rank + res.kernel.size() == c);
            for (const auto& v : res.kernel)
                for (size_t i = 0; i < r; ++i) {
                    Rational dot(0);
                    for (size_t j = 0; j < c; ++j) dot += m.at(i, j) * v[j];
                    CHECK(dot == 0);
                }
        }
    }
}

TEST_CASE("determinant") {
    RationalMatrix m(3, 3);
    long vals[3][3] = {{2, 0, 1}, {1, 3, -1}, {0, 4, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
    // expansion by hand: 2*(3+4) - 0 + 1*(4-0)
    CHECK(determinant(m) == Rational(18));

    RationalMatrix singular(2, 2);
    singular.at(0, 0) = 1;
    singular.at(0, 1) = 2;
    singular.at(1, 0) = 2;
    singular.at(1, 1) = 4;
    CHECK(determinant(singular) == Rational(0));

    RationalMatrix empty(0, 0);
    CHECK(determinant(empty) == Rational(1));
}
