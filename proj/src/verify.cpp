#include "coxspin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

#include "coxspin/linalg.hpp"

namespace coxspin {

std::vector<QuadraticDegree> quadratic_degrees(int n) {
    if (n < 5) throw std::invalid_argument("quadratic_degrees needs n >= 5");
    auto subs = even_subsets(n);
    std::map<Multidegree, std::vector<SpinMonomial>> groups;
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = i; j < subs.size(); ++j)
            groups[multidegree(subs[i], subs[j])].emplace_back(subs[i], subs[j]);

    std::vector<QuadraticDegree> out;
    for (auto& [d, monos] : groups) {
        QuadraticDegree qd;
        qd.d = d;
        std::sort(monos.begin(), monos.end());
        qd.monomials = std::move(monos);
        for (int s = 0; 2 * s <= n; ++s) {
            Multidegree rep(n + 1, 0);
            rep[0] = 2;
            for (int j = 1; j <= 2 * s; ++j) rep[j] = 1;
            if (d == rep) qd.rep_s = s;
        }
        out.push_back(std::move(qd));
    }
    return out;
}

CoxSpace cox_quadric_space(const std::vector<SpinMonomial>& monomials,
                           const std::map<EvenSubset, Polynomial>& gens) {
    CoxSpace out;
    if (monomials.empty()) return out;
    std::vector<Polynomial> images;
    std::set<Monomial, MonomialLess> support;
    for (const auto& m : monomials) {
        Polynomial prod = gens.at(m.a) * gens.at(m.b);
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
        for (size_t j = 0; j < monomials.size(); ++j) q.add(monomials[j], v[j]);
        out.basis.push_back(std::move(q));
    }
    return out;
}

bool check_inclusion(int n, const GrassmannPoint& p, const GrassmannPoint& y,
                     const GrassmannPoint& c) {
    auto gens = all_sub_pfaffians(build_A(y, p));
    auto a = scaling_vector(c, y, p);
    for (const auto& q : all_wick_quadrics(n)) {
        if (!evaluate_quadric(q, gens).is_zero()) return false;
        if (!evaluate_quadric(scale_quadric(q, a), gens).is_zero()) return false;
    }
    return true;
}

namespace {

size_t rank_of(const std::vector<const Quadric*>& quads,
               const std::vector<SpinMonomial>& monomials,
               const std::vector<const std::vector<Rational>*>& extra_rows = {}) {
    if (quads.empty() && extra_rows.empty()) return 0;
    RationalMatrix m(quads.size() + extra_rows.size(), monomials.size());
    for (size_t i = 0; i < quads.size(); ++i)
        for (const auto& [mono, c] : quads[i]->terms()) {
            auto it = std::lower_bound(monomials.begin(), monomials.end(), mono);
            m.at(i, static_cast<size_t>(it - monomials.begin())) = c;
        }
    for (size_t e = 0; e < extra_rows.size(); ++e)
        for (size_t j = 0; j < monomials.size(); ++j)
            m.at(quads.size() + e, j) = (*extra_rows[e])[j];
    return kernel_and_rank(m).rank;
}

struct Translates {
    std::vector<ScalingVector> scalings;  // beyond the identity translate
};

MainReport run_main(int n, uint64_t seed, long bound, int max_translates,
                    int jobs, bool degenerate_c) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    MainReport rep;
    rep.n = n;
    rep.seed = seed;

    auto t0 = clock::now();
    rep.data = sample_generic(n, seed, bound);
    if (degenerate_c) rep.data.c = rep.data.y;
    rep.timings_ms["sample"] = ms_since(t0);

    t0 = clock::now();
    auto gens = all_sub_pfaffians(build_A(rep.data.y, rep.data.p));
    rep.timings_ms["generators"] = ms_since(t0);

    auto wicks = all_wick_quadrics(n);
    std::map<Multidegree, std::vector<const Quadric*>> wicks_by_degree;
    for (const auto& q : wicks) wicks_by_degree[q.degree()].push_back(&q);

    Translates tr;
    tr.scalings.push_back(scaling_vector(rep.data.c, rep.data.y, rep.data.p));
    rep.translates_used = 2;

    Rng extra_rng(seed ^ 0xa5a5a5a5a5a5a5a5ULL);
    auto degrees = quadratic_degrees(n);

    t0 = clock::now();
    while (true) {
        // Scaled copies of every Wick quadric, per translate.
        std::vector<std::vector<Quadric>> scaled(tr.scalings.size());
        for (size_t t = 0; t < tr.scalings.size(); ++t) {
            scaled[t].reserve(wicks.size());
            for (const auto& q : wicks) scaled[t].push_back(scale_quadric(q, tr.scalings[t]));
        }
        std::map<Multidegree, std::vector<const Quadric*>> combined_by_degree = wicks_by_degree;
        for (const auto& family : scaled)
            for (const auto& q : family) combined_by_degree[q.degree()].push_back(&q);

        rep.degrees.assign(degrees.size(), DegreeReport{});
        auto worker = [&](size_t lo, size_t hi) {
            for (size_t k = lo; k < hi; ++k) {
                const auto& qd = degrees[k];
                DegreeReport& r = rep.degrees[k];
                r.degree = qd.d;
                r.rep_s = qd.rep_s;
                r.monomial_count = static_cast<int>(qd.monomials.size());
                CoxSpace cox = cox_quadric_space(qd.monomials, gens);
                r.cox_kernel_dim = static_cast<int>(cox.dim);
                r.quotient_dim = r.monomial_count - r.cox_kernel_dim;

                std::vector<const Quadric*> none;
                auto wit = wicks_by_degree.find(qd.d);
                const auto& w = wit == wicks_by_degree.end() ? none : wit->second;
                auto cit = combined_by_degree.find(qd.d);
                const auto& comb = cit == combined_by_degree.end() ? none : cit->second;

                r.spin_rank = static_cast<int>(rank_of(w, qd.monomials));
                r.combined_rank = static_cast<int>(rank_of(comb, qd.monomials));
                r.equal = r.combined_rank == r.cox_kernel_dim;

                // rank additivity: adding the kernel basis must not grow the rank
                // beyond the kernel dimension
                std::vector<const std::vector<Rational>*> kernel_rows;
                std::vector<std::vector<Rational>> kernel_store;
                kernel_store.reserve(cox.basis.size());
                for (const auto& q : cox.basis) {
                    std::vector<Rational> row(qd.monomials.size(), Rational(0));
                    for (const auto& [mono, c] : q.terms()) {
                        auto it = std::lower_bound(qd.monomials.begin(), qd.monomials.end(), mono);
                        row[static_cast<size_t>(it - qd.monomials.begin())] = c;
                    }
                    kernel_store.push_back(std::move(row));
                }
                for (const auto& row : kernel_store) kernel_rows.push_back(&row);
                size_t joint = rank_of(comb, qd.monomials, kernel_rows);
                r.inclusion_ok = joint == static_cast<size_t>(r.cox_kernel_dim);
            }
        };
        if (jobs <= 1) {
            worker(0, degrees.size());
        } else {
            const size_t nj = static_cast<size_t>(jobs);
            std::vector<std::thread> pool;
            size_t chunk = (degrees.size() + nj - 1) / nj;
            for (size_t t = 0; t < nj; ++t) {
                size_t lo = std::min(degrees.size(), t * chunk);
                size_t hi = std::min(degrees.size(), (t + 1) * chunk);
                if (lo < hi) pool.emplace_back(worker, lo, hi);
            }
            for (auto& th : pool) th.join();
        }

        rep.verdict = std::all_of(rep.degrees.begin(), rep.degrees.end(),
                                  [](const DegreeReport& r) { return r.equal; });
        if (rep.verdict || rep.translates_used >= max_translates) break;

        GrassmannPoint next;
        next.n = n;
        do {
            next.upper.clear();
            next.lower.clear();
            for (int i = 0; i < n; ++i) {
                next.upper.push_back(Rational(extra_rng.uniform(-bound, bound)));
                next.lower.push_back(Rational(extra_rng.uniform(-bound, bound)));
            }
        } while (!genericity_check(next, rep.data.p));
        tr.scalings.push_back(scaling_vector(next, rep.data.y, rep.data.p));
        ++rep.translates_used;
    }
    rep.timings_ms["degrees"] = ms_since(t0);

    for (const auto& r : rep.degrees) {
        if (r.rep_s < 0) continue;
        int expect = r.rep_s == 0 ? 1 : 1 << (r.rep_s - 1);
        if (r.quotient_dim != expect) rep.representative_dims_ok = false;
    }
    return rep;
}

}  // namespace

MainReport check_main(int n, uint64_t seed, long bound, int max_translates, int jobs) {
    if (n < 5) throw std::invalid_argument("check_main needs n >= 5");
    return run_main(n, seed, bound, max_translates, jobs, false);
}

MainReport check_main_degenerate(int n, uint64_t seed, long bound) {
    return run_main(n, seed, bound, 2, 1, true);
}

std::vector<Rational> sample_y_affine(const Configuration& cfg, Rng& rng, long bound) {
    GrassmannPoint p = gale_dual(cfg);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rational> y;
        for (int i = 0; i < cfg.n - 2; ++i) y.push_back(Rational(rng.uniform(-bound, bound)));
        bool ok = true;
        for (const auto& v : y)
            if (v == 0) ok = false;
        if (!ok) continue;
        if (genericity_check(standard_rows(cfg.n, y), p)) return y;
    }
    throw std::runtime_error("sample_y_affine: retry budget exhausted");
}

bool vanishing_order_check(const Configuration& cfg, const std::vector<Rational>& y_affine,
                           const EvenSubset& B, int trials, Rng& rng, long bound) {
    const int s = static_cast<int>(B.size()) / 2;
    Polynomial pf = sub_pfaffian(build_M(cfg, y_affine), B);
    if (pf.is_zero()) return false;
    for (int t = 0; t < trials; ++t) {
        std::map<Var, Polynomial> bind;
        for (int i = 1; i <= cfg.n - 2; ++i) {
            Polynomial shifted(cfg.q[i - 1]);
            shifted += Polynomial::variable(epsvar()) * Rational(rng.uniform(-bound, bound));
            bind.emplace(xvar(i), std::move(shifted));
        }
        auto order = epsilon_order(substitute(pf, bind), epsvar());
        if (order.has_value() && *order < s - 1) return false;
    }
    return true;
}

bool membership_degree_check(const Configuration& cfg, const std::vector<Rational>& y_affine,
                             const EvenSubset& B, int trials, Rng& rng, long bound) {
    const int n = cfg.n;
    const int s = static_cast<int>(B.size()) / 2;
    const int delta = B.contains(n) ? 1 : 0;
    Polynomial pf = sub_pfaffian(build_M(cfg, y_affine), B);
    if (pf.degree() != s - delta) return false;

    // multiplicity at the standard points Q_1..Q_(n-2) and at Q_(n-1) = (1..1)
    for (int point = 1; point <= n - 1; ++point) {
        long need = (s - delta) - (B.contains(point) ? 1 : 0);
        if (need <= 0) continue;
        for (int t = 0; t < trials; ++t) {
            std::map<Var, Polynomial> bind;
            for (int i = 1; i <= n - 2; ++i) {
                Rational base = point == n - 1 ? Rational(1) : Rational(i == point ? 1 : 0);
                Polynomial shifted(base);
                shifted += Polynomial::variable(epsvar()) * Rational(rng.uniform(-bound, bound));
                bind.emplace(xvar(i), std::move(shifted));
            }
            auto order = epsilon_order(substitute(pf, bind), epsvar());
            if (order.has_value() && *order < need) return false;
        }
    }
    return true;
}

}  // namespace coxspin
