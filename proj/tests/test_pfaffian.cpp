#include <doctest.h>

#include "coxspin/linalg.hpp"
#include "coxspin/pfaffian.hpp"
#include "coxspin/rng.hpp"
#include "coxspin/spinor.hpp"

using namespace coxspin;

namespace {

Polynomial zpoly(int i, int j) { return Polynomial::variable(zvar(i, j)); }

SkewMatrix random_numeric_skew(int n, Rng& rng) {
    SkewMatrix a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            a.set(i, j, Polynomial(make_rational(rng.uniform(-9, 9), rng.uniform(1, 5))));
    return a;
}

RationalMatrix full_matrix(const SkewMatrix& a) {
    RationalMatrix m(a.size(), a.size());
    for (int i = 1; i <= a.size(); ++i)
        for (int j = 1; j <= a.size(); ++j) m.at(i - 1, j - 1) = a.get(i, j).constant_value();
    return m;
}

}  // namespace

TEST_CASE("pfaffian base cases") {
    SkewMatrix empty(0);
    CHECK(pfaffian(empty) == Polynomial(Rational(1)));

    SkewMatrix two(2);
    two.set(1, 2, Polynomial::variable(Var::intern("a")));
    CHECK(pfaffian(two) == Polynomial::variable(Var::intern("a")));

    SkewMatrix odd(3);
    CHECK_THROWS_AS(pfaffian(odd), std::invalid_argument);
}

TEST_CASE("generic pfaffians via the matching expansion") {
    CHECK(pfaffian(generic_skew(4)) ==
          zpoly(1, 2) * zpoly(3, 4) - zpoly(1, 3) * zpoly(2, 4) + zpoly(1, 4) * zpoly(2, 3));

    SUBCASE("principal submatrix") {
        auto z6 = generic_skew(6);
        CHECK(sub_pfaffian(z6, EvenSubset(6, {1, 2})) == zpoly(1, 2));
        CHECK(sub_pfaffian(z6, EvenSubset(6, {2, 3, 5, 6})) ==
              zpoly(2, 3) * zpoly(5, 6) - zpoly(2, 5) * zpoly(3, 6) + zpoly(2, 6) * zpoly(3, 5));
        CHECK(sub_pfaffian(z6, EvenSubset(6, {})) == Polynomial(Rational(1)));
        CHECK_THROWS_AS(sub_pfaffian(generic_skew(4), EvenSubset(6, {5, 6})),
                        std::invalid_argument);
    }
}

TEST_CASE("skew storage negates below the diagonal") {
    SkewMatrix a(3);
    a.set(2, 1, Polynomial(Rational(5)));
    CHECK(a.get(1, 2) == Polynomial(Rational(-5)));
    CHECK(a.get(2, 1) == Polynomial(Rational(5)));
    CHECK(a.get(3, 3) == Polynomial());
}

TEST_CASE("pfaffian squared equals the determinant") {
    Rng rng(17);
    for (int n : {2, 4, 6, 8}) {
        for (int trial = 0; trial < 3; ++trial) {
            SkewMatrix a = random_numeric_skew(n, rng);
            Rational pf = pfaffian(a).constant_value();
            CHECK(pf * pf == determinant(full_matrix(a)));
        }
    }
}

TEST_CASE("diagonal congruence scales by det(D)") {
    Rng rng(23);
    for (int n : {2, 4, 6}) {
        SkewMatrix a = random_numeric_skew(n, rng);
        std::vector<Rational> d;
        Rational det_d(1);
        for (int i = 0; i < n; ++i) {
            Rational v = rng.nonzero_int(7);
            d.push_back(v);
            det_d *= v;
        }
        SkewMatrix scaled(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                scaled.set(i, j, a.get(i, j) * (d[i - 1] * d[j - 1]));
        CHECK(pfaffian(scaled).constant_value() == pfaffian(a).constant_value() * det_d);
    }
}

TEST_CASE("shared-expansion sub-pfaffians agree with the direct route") {
    auto all = all_sub_pfaffians(generic_skew(6));
    auto z6 = generic_skew(6);
    CHECK(all.size() == 32);
    for (const auto& [B, pf] : all) CHECK(pf == sub_pfaffian(z6, B));
}
