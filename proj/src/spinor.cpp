#include "coxspin/spinor.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "coxspin/linalg.hpp"

namespace coxspin {

Multidegree multidegree(const EvenSubset& A, const EvenSubset& B) {
    if (A.n != B.n) throw std::invalid_argument("multidegree: ambient size mismatch");
    Multidegree d(A.n + 1, 0);
    d[0] = 2;
    for (int a : A.elems) ++d[a];
    for (int b : B.elems) ++d[b];
    return d;
}

SpinMonomial::SpinMonomial(EvenSubset x, EvenSubset y) {
    if (x.n != y.n) throw std::invalid_argument("SpinMonomial: ambient size mismatch");
    if (y < x) std::swap(x, y);
    a = std::move(x);
    b = std::move(y);
}

void Quadric::add(const SpinMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Quadric::coefficient(const SpinMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Multidegree Quadric::degree() const {
    if (terms_.empty()) throw std::logic_error("degree of the zero quadric");
    Multidegree d = multidegree(terms_.begin()->first.a, terms_.begin()->first.b);
    for (const auto& [m, c] : terms_)
        if (multidegree(m.a, m.b) != d) throw std::logic_error("quadric is not multihomogeneous");
    return d;
}

Quadric Quadric::operator*(const Rational& c) const {
    Quadric r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

namespace {

// f with an arbitrary index list: sorting sign, or zero on a repeat.
struct NormalizedIndex {
    EvenSubset set;
    int sign = 0;  // 0 means the term vanishes
};

NormalizedIndex normalize_f_index(std::vector<int> idx, int n) {
    NormalizedIndex out;
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) return out;
    out.sign = idx.empty() ? 1 : permutation_sign(idx, sorted);
    out.set = EvenSubset(n, std::move(sorted));
    return out;
}

}  // namespace

bool spin_monomial_greater(const SpinMonomial& a, const SpinMonomial& b) {
    // Reverse lex: scan variables from the smallest upward; the first
    // difference decides, smaller exponent wins. Ranks come from the fixed
    // linear extension (rank 0 = largest variable).
    int a1 = spin_rank(a.a), a2 = spin_rank(a.b);
    int b1 = spin_rank(b.a), b2 = spin_rank(b.b);
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    if (a2 != b2) return a2 < b2;
    // Same smallest-variable position; compare its exponent.
    int ea = a1 == a2 ? 2 : 1, eb = b1 == b2 ? 2 : 1;
    if (ea != eb) return ea < eb;
    if (a1 != b1) return a1 < b1;
    return false;
}

SpinMonomial leading_monomial(const Quadric& q) {
    if (q.is_zero()) throw std::logic_error("leading monomial of the zero quadric");
    const SpinMonomial* best = nullptr;
    for (const auto& [m, c] : q.terms())
        if (!best || spin_monomial_greater(m, *best)) best = &m;
    return *best;
}

namespace {

Quadric normalize_leading(Quadric q) {
    if (q.is_zero()) return q;
    Rational lead = q.coefficient(leading_monomial(q));
    return q * (Rational(1) / lead);
}

}  // namespace

Quadric wick_quadric(const std::vector<int>& sigma, const std::vector<int>& tau, int n) {
    if (sigma.size() % 2 == 0 || tau.size() % 2 == 0)
        throw std::invalid_argument("wick_quadric: subsets must have odd cardinality");
    std::set<int> ss(sigma.begin(), sigma.end()), ts(tau.begin(), tau.end());
    if (ss.size() != sigma.size() || ts.size() != tau.size())
        throw std::invalid_argument("wick_quadric: repeated indices");
    for (int v : sigma)
        if (v < 1 || v > n) throw std::invalid_argument("wick_quadric: index out of range");
    for (int v : tau)
        if (v < 1 || v > n) throw std::invalid_argument("wick_quadric: index out of range");

    std::vector<int> sig(sigma), ta(tau);
    std::sort(sig.begin(), sig.end());
    std::sort(ta.begin(), ta.end());

    Quadric q;
    // sum_i (-1)^i f_{tau_i, sigma} f_{tau minus tau_i}
    for (size_t i = 0; i < ta.size(); ++i) {
        std::vector<int> first{ta[i]};
        first.insert(first.end(), sig.begin(), sig.end());
        std::vector<int> second;
        for (size_t t = 0; t < ta.size(); ++t)
            if (t != i) second.push_back(ta[t]);
        auto nf = normalize_f_index(first, n);
        auto ns = normalize_f_index(second, n);
        if (nf.sign == 0 || ns.sign == 0) continue;
        int sgn = ((i + 1) % 2 == 0 ? 1 : -1) * nf.sign * ns.sign;
        q.add(SpinMonomial(nf.set, ns.set), Rational(sgn));
    }
    // sum_j (-1)^j f_{sigma minus sigma_j} f_{sigma_j, tau}
    for (size_t j = 0; j < sig.size(); ++j) {
        std::vector<int> first;
        for (size_t t = 0; t < sig.size(); ++t)
            if (t != j) first.push_back(sig[t]);
        std::vector<int> second{sig[j]};
        second.insert(second.end(), ta.begin(), ta.end());
        auto nf = normalize_f_index(first, n);
        auto ns = normalize_f_index(second, n);
        if (nf.sign == 0 || ns.sign == 0) continue;
        int sgn = ((j + 1) % 2 == 0 ? 1 : -1) * nf.sign * ns.sign;
        q.add(SpinMonomial(nf.set, ns.set), Rational(sgn));
    }
    return normalize_leading(std::move(q));
}

std::vector<Quadric> all_wick_quadrics(int n) {
    if (n < 2) throw std::invalid_argument("all_wick_quadrics needs n >= 2");
    std::vector<std::vector<int>> odd;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) % 2 == 0) continue;
        std::vector<int> e;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) e.push_back(i + 1);
        odd.push_back(std::move(e));
    }
    std::sort(odd.begin(), odd.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    // Overlapping pairs contribute too: their repeated-index terms drop out
    // and the survivors are the straightening relations in the multidegrees
    // with a doubled index.
    std::vector<Quadric> out;
    std::set<Quadric::TermMap> seen;
    for (size_t i = 0; i < odd.size(); ++i) {
        for (size_t j = i + 1; j < odd.size(); ++j) {
            Quadric q = wick_quadric(odd[i], odd[j], n);
            if (q.is_zero()) continue;
            if (seen.insert(q.terms()).second) out.push_back(std::move(q));
        }
    }
    return out;
}

std::vector<SpinMonomial> initial_ideal_gens(int n) {
    std::vector<SpinMonomial> out;
    for (const auto& [a, b] : incomparable_pairs(n)) out.emplace_back(a, b);
    return out;
}

Quadric scale_quadric(const Quadric& q, const ScalingVector& a) {
    Quadric r;
    for (const auto& [m, c] : q.terms()) {
        auto ia = a.entries.find(m.a);
        auto ib = a.entries.find(m.b);
        if (ia == a.entries.end() || ib == a.entries.end())
            throw std::invalid_argument("scale_quadric: missing scaling entry");
        if (ia->second == 0 || ib->second == 0)
            throw std::invalid_argument("scale_quadric: zero scaling entry");
        r.add(m, c * ia->second * ib->second);
    }
    return r;
}

Polynomial evaluate_quadric(const Quadric& q, const std::map<EvenSubset, Polynomial>& subs) {
    Polynomial out;
    for (const auto& [m, c] : q.terms()) {
        auto ia = subs.find(m.a), ib = subs.find(m.b);
        if (ia == subs.end() || ib == subs.end())
            throw std::invalid_argument("evaluate_quadric: missing substitution");
        out += ia->second * ib->second * c;
    }
    return out;
}

SkewMatrix generic_skew(int n) {
    SkewMatrix z(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) z.set(i, j, Polynomial::variable(zvar(i, j)));
    return z;
}

std::vector<SpinMonomial> monomials_of_degree(int n, const Multidegree& d) {
    auto subs = even_subsets(n);
    std::vector<SpinMonomial> out;
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = i; j < subs.size(); ++j)
            if (multidegree(subs[i], subs[j]) == d) out.emplace_back(subs[i], subs[j]);
    std::sort(out.begin(), out.end());
    return out;
}

QuadricSpace spinor_quadric_oracle(int n, const Multidegree& d) {
    QuadricSpace out;
    out.monomials = monomials_of_degree(n, d);
    if (out.monomials.empty()) return out;

    static std::mutex cache_mu;
    static std::map<int, std::map<EvenSubset, Polynomial>> pfaff_cache;
    std::map<EvenSubset, Polynomial> pf;
    {
        std::lock_guard lock(cache_mu);
        auto& slot = pfaff_cache[n];
        if (slot.empty()) slot = all_sub_pfaffians(generic_skew(n));
        pf = slot;
    }

    std::vector<Polynomial> images;
    std::set<Monomial, MonomialLess> support;
    for (const auto& m : out.monomials) {
        Polynomial prod = pf.at(m.a) * pf.at(m.b);
        for (const auto& [mono, c] : prod.terms()) support.insert(mono);
        images.push_back(std::move(prod));
    }
    std::vector<Monomial> rows(support.begin(), support.end());
    RationalMatrix mat(rows.size(), images.size());
    for (size_t j = 0; j < images.size(); ++j)
        for (const auto& [mono, c] : images[j].terms()) {
            size_t i = std::lower_bound(rows.begin(), rows.end(), mono, MonomialLess()) - rows.begin();
            mat.at(i, j) = c;
        }
    auto ker = kernel_and_rank(mat);
    out.dim = ker.kernel.size();
    for (const auto& v : ker.kernel) {
        Quadric q;
        for (size_t j = 0; j < out.monomials.size(); ++j) q.add(out.monomials[j], v[j]);
        out.basis.push_back(std::move(q));
    }
    return out;
}

}  // namespace coxspin
