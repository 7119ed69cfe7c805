#include <doctest.h>

#include "coxspin/config.hpp"
#include "coxspin/json_io.hpp"
#include "coxspin/verify.hpp"

using namespace coxspin;

namespace {

Configuration demo_cfg() {
    Configuration cfg;
    cfg.n = 5;
    cfg.q = {Rational(2), Rational(3), Rational(5)};
    return cfg;
}

Polynomial plucker_binomial(int i, int j) {
    return Polynomial::variable(Xvar(i)) * Polynomial::variable(xvar(j)) -
           Polynomial::variable(Xvar(j)) * Polynomial::variable(xvar(i));
}

Rational product_pluckers(const EvenSubset& B, const GrassmannPoint& p) {
    Rational prod(1);
    for (size_t a = 0; a < B.size(); ++a)
        for (size_t b = a + 1; b < B.size(); ++b) prod *= p.plucker(B.elems[a], B.elems[b]);
    return prod;
}

GrassmannPoint random_generic_point(int n, const GrassmannPoint& p, Rng& rng, long bound) {
    GrassmannPoint g;
    do {
        g.n = n;
        g.upper.clear();
        g.lower.clear();
        for (int i = 0; i < n; ++i) {
            g.upper.push_back(Rational(rng.uniform(-bound, bound)));
            g.lower.push_back(Rational(rng.uniform(-bound, bound)));
        }
    } while (!genericity_check(g, p));
    return g;
}

}  // namespace

TEST_CASE("configuration validation") {
    CHECK_NOTHROW(validate(demo_cfg()));
    Configuration bad = demo_cfg();
    bad.q[1] = 0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = demo_cfg();
    bad.q[1] = 1;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = demo_cfg();
    bad.q[1] = bad.q[0];
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = demo_cfg();
    bad.n = 4;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("gale dual of the standard chart") {
    GrassmannPoint p = gale_dual(demo_cfg());
    CHECK(p.upper == std::vector<Rational>{1, 1, 1, 1, 0});
    CHECK(p.lower == std::vector<Rational>{2, 3, 5, 0, 1});
    CHECK(p.plucker(1, 2) == Rational(1));   // 3 - 2
    CHECK(p.plucker(1, 4) == Rational(-2));  // -p_1
    CHECK(p.plucker(4, 5) == Rational(1));
    CHECK(p.plucker(2, 5) == Rational(1));
}

TEST_CASE("psi determinants") {
    GrassmannPoint p = gale_dual(demo_cfg());

    SUBCASE("empty subset") {
        CHECK(psi_symbolic(EvenSubset(5, {}), p) == Polynomial(Rational(1)));
        CHECK(psi_value(EvenSubset(5, {}), p, p) == Rational(1));
    }
    SUBCASE("size two is minus the Pluecker binomial") {
        for (int b1 = 1; b1 <= 5; ++b1)
            for (int b2 = b1 + 1; b2 <= 5; ++b2)
                CHECK(psi_symbolic(EvenSubset(5, {b1, b2}), p) == -plucker_binomial(b1, b2));
    }
    SUBCASE("Vandermonde-type specialization is nonzero") {
        for (const auto& B : even_subsets(5)) {
            if (B.empty()) continue;
            int s = static_cast<int>(B.size()) / 2;
            GrassmannPoint x;
            x.n = 5;
            for (int i = 0; i < 5; ++i) {
                Rational up(1), lo(1);
                for (int t = 0; t < s; ++t) {
                    up *= p.upper[i];
                    lo *= p.lower[i];
                }
                x.upper.push_back(up);
                x.lower.push_back(lo);
            }
            CHECK(psi_value(B, x, p) != 0);
        }
    }
}

TEST_CASE("pfaffian-determinant identity") {
    SUBCASE("|B| = 2 cleared form") {
        // single matching: x_12 y_12 on both sides
        EvenSubset B(5, {1, 2});
        CHECK(check_okada_symbolic(B));
    }
    SUBCASE("|B| = 4 fully symbolic") {
        CHECK(check_okada_symbolic(EvenSubset(5, {1, 2, 3, 4})));
        CHECK(check_okada_symbolic(EvenSubset(6, {2, 3, 5, 6})));
    }
    SUBCASE("specialized form with lowercase rows set to 1") {
        EvenSubset B(5, {1, 2, 3, 4});
        std::map<Var, Polynomial> ones;
        for (int i = 1; i <= 5; ++i) {
            ones.emplace(xvar(i), Polynomial(Rational(1)));
            ones.emplace(yvar(i), Polynomial(Rational(1)));
            ones.emplace(pvar(i), Polynomial(Rational(1)));
        }
        Polynomial lhs = substitute(okada_lhs_cleared(B), ones);
        Polynomial rhs = substitute(
            psi_full_symbolic(B, RowFamily::XRows) * psi_full_symbolic(B, RowFamily::YRows), ones);
        CHECK(lhs == rhs);
        CHECK(!lhs.is_zero());
    }
    SUBCASE("numeric spot checks, n = 8") {
        Rng rng(5);
        CHECK(check_okada_numeric(EvenSubset(8, {1, 2, 3, 4, 5, 6, 7, 8}), rng, 50));
        CHECK(check_okada_numeric(EvenSubset(8, {2, 3, 5, 8}), rng, 50));
    }
}

TEST_CASE("generator matrix A") {
    GrassmannPoint p, y;
    p.n = y.n = 2;
    // engineered so that y_12 = 2, p_12 = 3
    p.upper = {1, 0};
    p.lower = {0, 3};
    y.upper = {1, 0};
    y.lower = {0, 2};
    SkewMatrix a = build_A(y, p);
    CHECK(a.get(1, 2) == plucker_binomial(1, 2) * make_rational(2, 3));
    CHECK(a.get(2, 1) == -(plucker_binomial(1, 2) * make_rational(2, 3)));

    SUBCASE("2x2 sub-pfaffians and the central identity") {
        Configuration cfg = demo_cfg();
        GrassmannPoint gp = gale_dual(cfg);
        Rng rng(9);
        GrassmannPoint gy = random_generic_point(5, gp, rng, 60);
        SkewMatrix amat = build_A(gy, gp);
        for (const auto& B : even_subsets(5)) {
            Polynomial fb = sub_pfaffian(amat, B);
            if (B.size() == 2) {
                Rational c = gy.plucker(B.elems[0], B.elems[1]) /
                             gp.plucker(B.elems[0], B.elems[1]);
                CHECK(fb == plucker_binomial(B.elems[0], B.elems[1]) * c);
            }
            // F_B = Psi_B(x,p) Psi_B(y,p) / prod p_ij as polynomials
            Rational scale = psi_value(B, gy, gp) / product_pluckers(B, gp);
            CHECK(fb == psi_symbolic(B, gp) * scale);
        }
    }
}

TEST_CASE("chart matrix M") {
    Configuration cfg = demo_cfg();
    std::vector<Rational> ya{Rational(7), Rational(11), Rational(13)};
    SkewMatrix m = build_M(cfg, ya);

    SUBCASE("pinned entries") {
        for (int i = 1; i <= 4; ++i) CHECK(m.get(i, 5) == Polynomial(Rational(1)));
        for (int i = 1; i <= 3; ++i)
            CHECK(m.get(i, 4) == Polynomial::variable(xvar(i)) * (-ya[i - 1] / cfg.q[i - 1]));
        CHECK(m.get(1, 2) ==
              (Polynomial::variable(xvar(2)) - Polynomial::variable(xvar(1))) * Rational(4));
    }
    SUBCASE("M is the chart specialization of A") {
        for (int n : {5, 6, 7}) {
            Rng rng(100 + n);
            Configuration cfg2;
            cfg2.n = n;
            for (int i = 0; i < n - 2; ++i) cfg2.q.push_back(Rational(17 + 3 * i));
            std::vector<Rational> ya2;
            for (int i = 0; i < n - 2; ++i) ya2.push_back(Rational(rng.uniform(2, 50)));
            GrassmannPoint p2 = gale_dual(cfg2);
            GrassmannPoint y2 = standard_rows(n, ya2);
            SkewMatrix a2 = build_A(y2, p2);
            SkewMatrix m2 = build_M(cfg2, ya2);
            auto bind = chart_bindings(n);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    CHECK(substitute(a2.get(i, j), bind) == m2.get(i, j));
        }
    }
}

TEST_CASE("bi-Pluecker expansion") {
    GrassmannPoint p = gale_dual(demo_cfg());

    SUBCASE("size two is a single Pluecker binomial") {
        EvenSubset B(5, {2, 4});
        CHECK(biplucker_expand(B, {2}, p) == plucker_binomial(2, 4));
    }
    SUBCASE("global sign against psi is (-1)^(s(s+1)/2), independent of the transversal") {
        for (const auto& B : even_subsets(5)) {
            if (B.empty()) continue;
            size_t s = B.size() / 2;
            Rational sign = (s * (s + 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1);
            Polynomial psi = psi_symbolic(B, p);
            // every transversal must reproduce psi up to that sign
            std::vector<bool> pick(B.size(), false);
            std::fill(pick.begin(), pick.begin() + s, true);
            do {
                std::vector<int> i_list;
                for (size_t t = 0; t < B.size(); ++t)
                    if (pick[t]) i_list.push_back(B.elems[t]);
                CHECK(biplucker_expand(B, i_list, p) * sign == psi);
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
    }
    SUBCASE("coefficient of a matching monomial") {
        EvenSubset B(5, {1, 2, 3, 4});
        auto terms = biplucker_terms(B, {1, 3}, p);
        REQUIRE(terms.size() == 2);  // s! completions
        bool found = false;
        for (const auto& t : terms) {
            if (t.pairs != std::vector<std::pair<int, int>>{{1, 2}, {3, 4}}) continue;
            found = true;
            // sgn of (1,2,3,4) -> (1,3,2,4) times p_{14} p_{32}
            CHECK(t.coeff == Rational(-1) * p.plucker(1, 4) * p.plucker(3, 2));
        }
        CHECK(found);
    }
    SUBCASE("invalid transversals rejected") {
        EvenSubset B(5, {1, 2, 3, 4});
        CHECK_THROWS_AS(biplucker_expand(B, {1}, p), std::invalid_argument);
        CHECK_THROWS_AS(biplucker_expand(B, {1, 1}, p), std::invalid_argument);
        CHECK_THROWS_AS(biplucker_expand(B, {1, 5}, p), std::invalid_argument);
    }
}

TEST_CASE("genericity and scaling vectors") {
    Configuration cfg = demo_cfg();
    GrassmannPoint p = gale_dual(cfg);

    SUBCASE("the base point itself is not generic") {
        CHECK_FALSE(genericity_check(p, p));
    }
    SUBCASE("random points with spread coordinates are generic") {
        Rng rng(21);
        GrassmannPoint c = random_generic_point(5, p, rng, 200);
        CHECK(genericity_check(c, p));
    }
    SUBCASE("scaling vector") {
        Rng rng(33);
        GrassmannPoint y = random_generic_point(5, p, rng, 80);
        GrassmannPoint c = random_generic_point(5, p, rng, 80);

        ScalingVector same = scaling_vector(y, y, p);
        for (const auto& [B, v] : same.entries) CHECK(v == Rational(1));

        ScalingVector a = scaling_vector(c, y, p);
        CHECK(a.entries.at(EvenSubset(5, {})) == Rational(1));

        // a(c)_B F_B(x, y, p) = F_B(x, c, p) exactly
        SkewMatrix ay = build_A(y, p), ac = build_A(c, p);
        for (const auto& B : even_subsets(5))
            CHECK(sub_pfaffian(ay, B) * a.entries.at(B) == sub_pfaffian(ac, B));
    }
}

TEST_CASE("pfaffian generators") {
    auto data = sample_generic(5, 8, 60);
    SkewMatrix a = build_A(data.y, data.p);
    for (const auto& B : even_subsets(5)) {
        Polynomial fb = pfaffian_generator(B, data.y, data.p);
        CHECK(fb == sub_pfaffian(a, B));
        CHECK(!fb.is_zero());  // y lies in G(p)
        if (!B.empty()) CHECK(fb.degree() == static_cast<long>(B.size()));
    }
}

TEST_CASE("json round trips") {
    Configuration cfg = demo_cfg();
    CHECK(configuration_from_json(configuration_to_json(cfg)).q == cfg.q);

    GrassmannPoint p = gale_dual(cfg);
    GrassmannPoint back = grassmann_from_json(grassmann_to_json(p));
    CHECK(back.upper == p.upper);
    CHECK(back.lower == p.lower);

    Polynomial poly =
        Polynomial::term(make_rational(3, 2), Monomial::of(xvar(1), 2) * Monomial::of(Xvar(2)));
    json j = polynomial_to_json(poly);
    CHECK(j.at("x1^2*X2") == "3/2");

    CHECK(rational_from_json(json("7/5")) == make_rational(7, 5));
    CHECK(rational_from_json(json(-4)) == Rational(-4));
    CHECK_THROWS_AS(configuration_from_json(json{{"n", 5}, {"q", json::array({"2", "2", "5"})}}),
                    std::invalid_argument);
}

TEST_CASE("deterministic sampling") {
    auto d1 = sample_generic(5, 42, 50);
    auto d2 = sample_generic(5, 42, 50);
    CHECK(d1.cfg.q == d2.cfg.q);
    CHECK(d1.y.lower == d2.y.lower);
    CHECK(d1.c.upper == d2.c.upper);
    CHECK(d1.retries == d2.retries);
    CHECK(genericity_check(d1.y, d1.p));
    CHECK(genericity_check(d1.c, d1.p));
    CHECK(d1.retries < 20);

    CHECK_THROWS_AS(sample_generic(5, 1, 10), std::invalid_argument);  // bound < n^2
}
