#include <doctest.h>

#include <set>

#include "coxspin/tree.hpp"

using namespace coxspin;

TEST_CASE("newick parsing") {
    SUBCASE("five-leaf caterpillar") {
        PhyloTree t = parse_newick("((1,2),(3,4),5);");
        CHECK(t.n_leaves() == 5);
        auto d = leaf_distances(t);
        CHECK(d[1][2] == Rational(2));
        CHECK(d[1][3] == Rational(4));
        CHECK(d[1][5] == Rational(3));
    }
    SUBCASE("lengths are honored, default 1") {
        PhyloTree t = parse_newick("((1:2,2:1):1,3:1,4:1);");
        auto d = leaf_distances(t);
        CHECK(d[1][2] == Rational(3));
        CHECK(d[1][3] == Rational(4));  // 2 + 1 + 1
        CHECK(d[3][4] == Rational(2));
    }
    SUBCASE("rational and decimal lengths") {
        PhyloTree t = parse_newick("((1:1/2,2:1/2):1,3:0.25,4:1);");
        auto d = leaf_distances(t);
        CHECK(d[1][2] == Rational(1));
        CHECK(d[3][4] == make_rational(5, 4));
    }
    SUBCASE("valence errors") {
        CHECK_THROWS_AS(parse_newick("(1,2,3,4);"), ValenceError);
        CHECK_THROWS_AS(parse_newick("((1,2),(3,4));"), ValenceError);  // degree-2 root
    }
    SUBCASE("parse errors carry a position") {
        try {
            parse_newick("((1,2),(3,4),5)");
            FAIL("expected a parse error");
        } catch (const NewickParseError& e) {
            CHECK(e.position == 15);
        }
        CHECK_THROWS_AS(parse_newick("((1,2),(3,2),5);"), NewickParseError);  // duplicate leaf
        CHECK_THROWS_AS(parse_newick("((1,2),(3,x),5);"), NewickParseError);
    }
    SUBCASE("labels must be 1..n") {
        CHECK_THROWS_AS(parse_newick("((1,2),(3,7),5);"), std::invalid_argument);
    }
}

TEST_CASE("canonical newick round trip") {
    for (const char* s : {"((1,2),(3,4),5);", "((1:2,2:1):1,3:1,4:1);", "(5,(2,(3,4)),1);"}) {
        PhyloTree t = parse_newick(s);
        std::string canon = to_newick(t);
        CHECK(to_newick(parse_newick(canon)) == canon);
    }
}

TEST_CASE("tree enumeration") {
    CHECK(enumerate_trees(3).size() == 1);
    CHECK(enumerate_trees(5).size() == 15);
    CHECK(enumerate_trees(6).size() == 105);
    CHECK_THROWS_AS(enumerate_trees(2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_trees(8), std::invalid_argument);

    SUBCASE("all topologies distinct by canonical form") {
        for (int n : {5, 6}) {
            std::set<std::string> canon;
            for (const auto& t : enumerate_trees(n)) canon.insert(to_newick(t));
            CHECK(canon.size() == enumerate_trees(n).size());
        }
    }
}

TEST_CASE("four point condition") {
    for (const auto& t : enumerate_trees(5)) {
        auto d = leaf_distances(t);
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j)
                for (int k = j + 1; k <= 5; ++k)
                    for (int l = k + 1; l <= 5; ++l) {
                        Rational a = d[i][j] + d[k][l];
                        Rational b = d[i][k] + d[j][l];
                        Rational c = d[i][l] + d[j][k];
                        Rational mx = std::max({a, b, c});
                        int attained = (a == mx) + (b == mx) + (c == mx);
                        CHECK(attained >= 2);
                    }
    }
}

TEST_CASE("disjoint path partition") {
    PhyloTree cat = parse_newick("((1,2),(3,4),5);");

    SUBCASE("cherries pair up") {
        auto m = disjoint_path_partition(cat, EvenSubset(5, {1, 2, 3, 4}));
        CHECK(m.pairs == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
        CHECK(paths_edge_disjoint(cat, m.pairs));
    }
    SUBCASE("a single pair is trivially disjoint") {
        auto m = disjoint_path_partition(cat, EvenSubset(5, {1, 3}));
        CHECK(m.pairs == std::vector<std::pair<int, int>>{{1, 3}});
    }
    SUBCASE("brute force agrees on every tree and subset, n = 5") {
        for (const auto& t : enumerate_trees(5)) {
            for (const auto& B : even_subsets(5)) {
                if (B.empty()) continue;
                auto part = disjoint_path_partition(t, B);
                auto brute = min_weight_matching(t, B);
                CHECK(brute.unique);
                CHECK(brute.best.pairs == part.pairs);
                CHECK(brute.best.sign == part.sign);
                CHECK(paths_edge_disjoint(t, part.pairs));
            }
        }
    }
}

TEST_CASE("leading form selection") {
    PhyloTree cat = parse_newick("((1,2),(3,4),5);");

    SUBCASE("size-two subsets have a single matching") {
        auto lead = leading_form_psi(EvenSubset(5, {2, 5}), cat);
        CHECK(lead.unique);
        CHECK(lead.pairs == std::vector<std::pair<int, int>>{{2, 5}});
    }
    SUBCASE("cherry selection on the caterpillar") {
        auto lead = leading_form_psi(EvenSubset(5, {1, 2, 3, 4}), cat);
        CHECK(lead.unique);
        CHECK(lead.pairs == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
    }
    SUBCASE("invariant under rescaling the metric") {
        PhyloTree scaled = cat;
        for (auto& adj : scaled.adj)
            for (auto& e : adj) e.len *= make_rational(7, 3);
        for (const auto& B : even_subsets(5)) {
            if (B.empty()) continue;
            auto l1 = leading_form_psi(B, cat);
            auto l2 = leading_form_psi(B, scaled);
            CHECK(l1.pairs == l2.pairs);
            CHECK(l1.unique == l2.unique);
        }
    }
    SUBCASE("matches the disjoint partition on every tree, n = 5") {
        for (const auto& t : enumerate_trees(5)) {
            for (const auto& B : even_subsets(5)) {
                if (B.empty()) continue;
                auto part = disjoint_path_partition(t, B);
                auto lead = leading_form_psi(B, t);
                CHECK(lead.unique);
                CHECK(lead.pairs == part.pairs);
            }
        }
    }
}

TEST_CASE("prime perturbation keeps lengths distinct") {
    PhyloTree t = enumerate_trees(5)[7];
    PhyloTree p = with_prime_lengths(t);
    std::set<Rational> lengths;
    std::set<std::pair<int, int>> seen;
    for (size_t v = 0; v < p.adj.size(); ++v)
        for (const auto& e : p.adj[v]) {
            std::pair<int, int> key{std::min(static_cast<int>(v), e.to),
                                    std::max(static_cast<int>(v), e.to)};
            if (seen.insert(key).second) lengths.insert(e.len);
        }
    CHECK(lengths.size() == seen.size());
}
