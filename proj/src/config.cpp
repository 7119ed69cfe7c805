#include "coxspin/config.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coxspin {

void validate(const Configuration& cfg) {
    if (cfg.n < 5) throw std::invalid_argument("configuration needs n >= 5");
    if (static_cast<int>(cfg.q.size()) != cfg.n - 2)
        throw std::invalid_argument("configuration needs n-2 affine coordinates");
    std::set<Rational> seen;
    for (const auto& v : cfg.q) {
        if (v == 0 || v == 1)
            throw std::invalid_argument("configuration coordinate equal to 0 or 1");
        if (!seen.insert(v).second)
            throw std::invalid_argument("configuration coordinates not distinct");
    }
}

Rational GrassmannPoint::plucker(int i, int j) const {
    if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("plucker index out of range");
    return upper[i - 1] * lower[j - 1] - upper[j - 1] * lower[i - 1];
}

GrassmannPoint standard_rows(int n, const std::vector<Rational>& affine) {
    if (static_cast<int>(affine.size()) != n - 2)
        throw std::invalid_argument("standard_rows needs n-2 coordinates");
    GrassmannPoint g;
    g.n = n;
    g.upper.assign(n, Rational(1));
    g.upper[n - 1] = 0;
    g.lower = affine;
    g.lower.push_back(Rational(0));
    g.lower.push_back(Rational(1));
    return g;
}

GrassmannPoint gale_dual(const Configuration& cfg) {
    validate(cfg);
    GrassmannPoint g = standard_rows(cfg.n, cfg.q);
    for (int i = 1; i <= cfg.n; ++i)
        for (int j = i + 1; j <= cfg.n; ++j)
            if (g.plucker(i, j) == 0)
                throw std::invalid_argument("degenerate configuration: vanishing Pluecker coordinate");
    return g;
}

namespace {

Polynomial det_minor(const std::vector<std::vector<Polynomial>>& m, uint32_t colmask,
                     std::map<uint32_t, Polynomial>& memo) {
    if (colmask == 0) return Polynomial(Rational(1));
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    const size_t n = m.size();
    const size_t row = n - static_cast<size_t>(__builtin_popcount(colmask));
    Polynomial result;
    int sign = 1;
    for (size_t col = 0; col < n; ++col) {
        if (!(colmask & (1u << col))) continue;
        if (!m[row][col].is_zero()) {
            Polynomial sub = det_minor(m, colmask & ~(1u << col), memo);
            if (sign > 0)
                result += m[row][col] * sub;
            else
                result -= m[row][col] * sub;
        }
        sign = -sign;
    }
    memo.emplace(colmask, result);
    return result;
}

}  // namespace

Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m) {
    const size_t n = m.size();
    if (n > 31) throw std::invalid_argument("det_poly limited to 31 columns");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_poly needs a square matrix");
    if (n == 0) return Polynomial(Rational(1));
    std::map<uint32_t, Polynomial> memo;
    return det_minor(m, (1u << n) - 1, memo);
}

namespace {

// V_B row for one subset element b: the 2s monomial entries
// (xpart p^(s-1), xpart p^(s-2) P, .., xpart P^(s-1), Xpart p^(s-1), ..).
// The caller supplies the x/X and p/P contributions per column block.
template <typename EntryFn>
std::vector<std::vector<Polynomial>> v_matrix(const EvenSubset& B, EntryFn entry) {
    const size_t s = B.size() / 2;
    std::vector<std::vector<Polynomial>> m(2 * s, std::vector<Polynomial>(2 * s));
    for (size_t r = 0; r < 2 * s; ++r) {
        int b = B.elems[r];
        for (size_t k = 0; k < s; ++k) {
            m[r][k] = entry(b, false, s - 1 - k, k);      // x_b p_b^{s-1-k} P_b^k
            m[r][s + k] = entry(b, true, s - 1 - k, k);   // X_b p_b^{s-1-k} P_b^k
        }
    }
    return m;
}

}  // namespace

Rational psi_value(const EvenSubset& B, const GrassmannPoint& x, const GrassmannPoint& p) {
    const size_t s = B.size() / 2;
    if (s == 0) return Rational(1);
    RationalMatrix m(2 * s, 2 * s);
    for (size_t r = 0; r < 2 * s; ++r) {
        int b = B.elems[r];
        Rational pb = p.lower[b - 1], Pb = p.upper[b - 1];
        std::vector<Rational> powers(s);  // p_b^{s-1-k} P_b^k for k = 0..s-1
        for (size_t k = 0; k < s; ++k) {
            Rational v(1);
            for (size_t t = 0; t < s - 1 - k; ++t) v *= pb;
            for (size_t t = 0; t < k; ++t) v *= Pb;
            powers[k] = v;
        }
        for (size_t k = 0; k < s; ++k) {
            m.at(r, k) = x.lower[b - 1] * powers[k];
            m.at(r, s + k) = x.upper[b - 1] * powers[k];
        }
    }
    return determinant(m);
}

Polynomial psi_symbolic(const EvenSubset& B, const GrassmannPoint& p) {
    const size_t s = B.size() / 2;
    if (s == 0) return Polynomial(Rational(1));
    auto m = v_matrix(B, [&](int b, bool upper_var, size_t pe, size_t Pe) {
        Rational coeff(1);
        for (size_t t = 0; t < pe; ++t) coeff *= p.lower[b - 1];
        for (size_t t = 0; t < Pe; ++t) coeff *= p.upper[b - 1];
        return Polynomial::term(coeff, Monomial::of(upper_var ? Xvar(b) : xvar(b)));
    });
    return det_poly(m);
}

Polynomial psi_full_symbolic(const EvenSubset& B, RowFamily fam) {
    const size_t s = B.size() / 2;
    if (s == 0) return Polynomial(Rational(1));
    auto m = v_matrix(B, [&](int b, bool upper_var, size_t pe, size_t Pe) {
        Var xv = fam == RowFamily::XRows ? (upper_var ? Xvar(b) : xvar(b))
                                         : (upper_var ? Yvar(b) : yvar(b));
        Monomial mono = Monomial::of(xv);
        if (pe > 0) mono = mono * Monomial::of(pvar(b), static_cast<uint32_t>(pe));
        if (Pe > 0) mono = mono * Monomial::of(Pvar(b), static_cast<uint32_t>(Pe));
        return Polynomial::term(Rational(1), mono);
    });
    return det_poly(m);
}

std::map<EvenSubset, Rational> psi_all(const GrassmannPoint& x, const GrassmannPoint& p) {
    std::map<EvenSubset, Rational> out;
    for (const auto& B : even_subsets(p.n)) out.emplace(B, psi_value(B, x, p));
    return out;
}

SkewMatrix build_A(const GrassmannPoint& y, const GrassmannPoint& p) {
    if (y.n != p.n) throw std::invalid_argument("build_A: size mismatch");
    const int n = p.n;
    SkewMatrix a(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            Rational pij = p.plucker(i, j);
            if (pij == 0) throw std::invalid_argument("build_A: vanishing Pluecker coordinate of p");
            Rational c = y.plucker(i, j) / pij;
            Polynomial xij = Polynomial::term(Rational(1), Monomial::of(Xvar(i)) * Monomial::of(xvar(j))) -
                             Polynomial::term(Rational(1), Monomial::of(Xvar(j)) * Monomial::of(xvar(i)));
            a.set(i, j, xij * c);
        }
    }
    return a;
}

Polynomial pfaffian_generator(const EvenSubset& B, const GrassmannPoint& y,
                              const GrassmannPoint& p) {
    return sub_pfaffian(build_A(y, p), B);
}

SkewMatrix build_M(const Configuration& cfg, const std::vector<Rational>& y_affine) {
    validate(cfg);
    const int n = cfg.n;
    if (static_cast<int>(y_affine.size()) != n - 2)
        throw std::invalid_argument("build_M: y needs n-2 coordinates");
    SkewMatrix m(n);
    for (int i = 1; i <= n - 2; ++i) {
        for (int j = i + 1; j <= n - 2; ++j) {
            Rational den = cfg.q[j - 1] - cfg.q[i - 1];
            if (den == 0) throw std::invalid_argument("build_M: repeated configuration coordinate");
            Rational c = (y_affine[j - 1] - y_affine[i - 1]) / den;
            Polynomial diff = Polynomial::variable(xvar(j)) - Polynomial::variable(xvar(i));
            m.set(i, j, diff * c);
        }
        m.set(i, n - 1, Polynomial::variable(xvar(i)) * (-y_affine[i - 1] / cfg.q[i - 1]));
        m.set(i, n, Polynomial(Rational(1)));
    }
    m.set(n - 1, n, Polynomial(Rational(1)));
    return m;
}

std::map<Var, Polynomial> chart_bindings(int n) {
    std::map<Var, Polynomial> b;
    for (int i = 1; i <= n - 1; ++i) b.emplace(Xvar(i), Polynomial(Rational(1)));
    b.emplace(Xvar(n), Polynomial());
    b.emplace(xvar(n - 1), Polynomial());
    b.emplace(xvar(n), Polynomial(Rational(1)));
    return b;
}

namespace {

Polynomial pair_binomial(Var (*up)(int), Var (*lo)(int), int i, int j) {
    return Polynomial::term(Rational(1), Monomial::of(up(i)) * Monomial::of(lo(j))) -
           Polynomial::term(Rational(1), Monomial::of(up(j)) * Monomial::of(lo(i)));
}

// G(S) = sum over matchings mu of S of
//   sign(mu) prod_{e in mu} x_e y_e prod_{e in pairs(S) \ mu} p_e,
// computed by the Pfaffian-style recursion
//   G(S) = sum_k (-1)^k x_{s1 sk} y_{s1 sk}
//          prod_{u in S'} p_{s1 u} p_{sk u} G(S'),  S' = S \ {s1, sk}.
const Polynomial& okada_lhs_memo(const std::vector<int>& s,
                                 std::map<std::vector<int>, Polynomial>& memo) {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    Polynomial result;
    if (s.empty()) {
        result = Polynomial(Rational(1));
    } else {
        for (size_t k = 1; k < s.size(); ++k) {
            std::vector<int> rest;
            for (size_t t = 1; t < s.size(); ++t)
                if (t != k) rest.push_back(s[t]);
            Polynomial term = pair_binomial(&Xvar, &xvar, s[0], s[k]) *
                              pair_binomial(&Yvar, &yvar, s[0], s[k]);
            for (int u : rest) {
                term *= pair_binomial(&Pvar, &pvar, std::min(s[0], u), std::max(s[0], u));
                term *= pair_binomial(&Pvar, &pvar, std::min(s[k], u), std::max(s[k], u));
            }
            term *= okada_lhs_memo(rest, memo);
            if (k % 2 == 0)
                result -= term;
            else
                result += term;
        }
    }
    return memo.emplace(s, std::move(result)).first->second;
}

}  // namespace

Polynomial okada_lhs_cleared(const EvenSubset& B) {
    std::map<std::vector<int>, Polynomial> memo;
    return okada_lhs_memo(B.elems, memo);
}

bool check_okada_symbolic(const EvenSubset& B) {
    Polynomial lhs = okada_lhs_cleared(B);
    Polynomial rhs = psi_full_symbolic(B, RowFamily::XRows) * psi_full_symbolic(B, RowFamily::YRows);
    return lhs == rhs;
}

bool check_okada_numeric(const EvenSubset& B, Rng& rng, long bound) {
    const int n = B.n;
    auto draw = [&]() {
        GrassmannPoint g;
        g.n = n;
        for (int i = 0; i < n; ++i) {
            g.upper.push_back(Rational(rng.uniform(-bound, bound)));
            g.lower.push_back(Rational(rng.uniform(-bound, bound)));
        }
        return g;
    };
    GrassmannPoint x = draw(), y = draw(), p = draw();
    auto p_ok = [&]() {
        for (size_t a = 0; a < B.size(); ++a)
            for (size_t b = a + 1; b < B.size(); ++b)
                if (p.plucker(B.elems[a], B.elems[b]) == 0) return false;
        return true;
    };
    while (!p_ok()) p = draw();

    // pfaff(A_B) * prod p_ij  vs  Psi_B(x,p) Psi_B(y,p), all numeric.
    Rational lhs(0);
    for (const auto& mu : matchings_with_sign(B)) {
        Rational term(mu.sign);
        for (auto [i, j] : mu.pairs) term *= x.plucker(i, j) * y.plucker(i, j);
        for (size_t a = 0; a < B.size(); ++a)
            for (size_t b = a + 1; b < B.size(); ++b) {
                int i = B.elems[a], j = B.elems[b];
                bool in_mu = false;
                for (auto [mi, mj] : mu.pairs)
                    if (mi == i && mj == j) in_mu = true;
                if (!in_mu) term *= p.plucker(i, j);
            }
        lhs += term;
    }
    Rational rhs = psi_value(B, x, p) * psi_value(B, y, p);
    return lhs == rhs;
}

std::vector<BipluckerTerm> biplucker_terms(const EvenSubset& B, const std::vector<int>& i_list,
                                           const GrassmannPoint& p) {
    const size_t s = B.size() / 2;
    if (i_list.size() != s) throw std::invalid_argument("biplucker_terms: i_list must be half of B");
    std::set<int> iset(i_list.begin(), i_list.end());
    if (iset.size() != s) throw std::invalid_argument("biplucker_terms: i_list entries not distinct");
    for (int i : i_list)
        if (!B.contains(i)) throw std::invalid_argument("biplucker_terms: i_list not inside B");

    std::vector<int> j_list;
    for (int b : B.elems)
        if (!iset.count(b)) j_list.push_back(b);

    std::vector<BipluckerTerm> out;
    if (s == 0) return out;
    do {
        std::vector<int> image(i_list);
        image.insert(image.end(), j_list.begin(), j_list.end());
        BipluckerTerm term;
        term.coeff = permutation_sign(B.elems, image);
        for (size_t r = 0; r < s; ++r) {
            term.pairs.emplace_back(i_list[r], j_list[r]);
            for (size_t m = 0; m < s; ++m)
                if (m != r) term.coeff *= p.plucker(i_list[r], j_list[m]);
        }
        out.push_back(std::move(term));
    } while (std::next_permutation(j_list.begin(), j_list.end()));
    return out;
}

Polynomial biplucker_expand(const EvenSubset& B, const std::vector<int>& i_list,
                            const GrassmannPoint& p) {
    if (B.empty()) return Polynomial(Rational(1));
    Polynomial result;
    for (const auto& term : biplucker_terms(B, i_list, p)) {
        Polynomial prod{term.coeff};
        for (auto [i, j] : term.pairs) prod *= pair_binomial(&Xvar, &xvar, i, j);
        result += prod;
    }
    return result;
}

bool genericity_check(const GrassmannPoint& c, const GrassmannPoint& p) {
    for (const auto& B : even_subsets(p.n))
        if (psi_value(B, c, p) == 0) return false;
    return true;
}

ScalingVector scaling_vector(const GrassmannPoint& c, const GrassmannPoint& y,
                             const GrassmannPoint& p) {
    ScalingVector a;
    for (const auto& B : even_subsets(p.n)) {
        Rational num = psi_value(B, c, p), den = psi_value(B, y, p);
        if (num == 0 || den == 0)
            throw std::invalid_argument("scaling_vector: point outside G(p)");
        a.entries.emplace(B, num / den);
    }
    return a;
}

SampledData sample_generic(int n, uint64_t seed, long bound) {
    if (n < 5) throw std::invalid_argument("sample_generic needs n >= 5");
    if (bound < static_cast<long>(n) * n)
        throw std::invalid_argument("sample_generic needs bound >= n^2");
    Rng rng(seed);
    constexpr int kBudget = 1000;
    SampledData out;
    int tries = 0;

    auto sample_cfg = [&]() -> bool {
        Configuration cfg;
        cfg.n = n;
        for (int i = 0; i < n - 2; ++i) cfg.q.push_back(Rational(rng.uniform(-bound, bound)));
        try {
            validate(cfg);
        } catch (const std::invalid_argument&) {
            return false;
        }
        out.cfg = cfg;
        out.p = gale_dual(cfg);
        return true;
    };
    auto sample_point = [&](GrassmannPoint& g) -> bool {
        g.n = n;
        g.upper.clear();
        g.lower.clear();
        for (int i = 0; i < n; ++i) {
            g.upper.push_back(Rational(rng.uniform(-bound, bound)));
            g.lower.push_back(Rational(rng.uniform(-bound, bound)));
        }
        return genericity_check(g, out.p);
    };

    auto keep_trying = [&](auto&& step) {
        while (tries < kBudget) {
            if (step()) return;
            ++tries;
        }
        throw std::runtime_error("sample_generic: retry budget exhausted");
    };
    keep_trying(sample_cfg);
    keep_trying([&] { return sample_point(out.y); });
    keep_trying([&] { return sample_point(out.c); });
    out.retries = tries;
    return out;
}

}  // namespace coxspin
