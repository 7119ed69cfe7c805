#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxspin/config.hpp"
#include "coxspin/spinor.hpp"

namespace coxspin {

/// One quadratic multidegree with its monomial basis; rep_s >= 0 marks the
/// orbit representative N_s = deg(f_empty f_{1..2s}).
struct QuadraticDegree {
    Multidegree d;
    std::vector<SpinMonomial> monomials;
    int rep_s = -1;
};

/// All quadratic multidegrees of the spin polynomial ring, each with its
/// monomials, sorted by degree vector.
std::vector<QuadraticDegree> quadratic_degrees(int n);

struct CoxSpace {
    size_t dim = 0;
    std::vector<Quadric> basis;
};

/// Degree-d slice of the Cox ideal: the kernel of f_A f_B -> gens[A] gens[B]
/// on the given monomials, by exact linear algebra. `gens` is either the
/// family F_B of sub-Pfaffians of the A-matrix or the pfaffians of the
/// M-chart; the dimensions agree.
CoxSpace cox_quadric_space(const std::vector<SpinMonomial>& monomials,
                           const std::map<EvenSubset, Polynomial>& gens);

/// Prop 7.1/7.2 content: every Wick quadric, and every a(c)-scaled Wick
/// quadric, evaluates to zero under f_B -> F_B(x, y, p). Passing c = y
/// exercises the unscaled inclusion.
bool check_inclusion(int n, const GrassmannPoint& p, const GrassmannPoint& y,
                     const GrassmannPoint& c);

struct DegreeReport {
    Multidegree degree;
    int monomial_count = 0;
    int cox_kernel_dim = 0;
    int spin_rank = 0;
    int combined_rank = 0;
    int quotient_dim = 0;
    bool equal = false;
    bool inclusion_ok = true;  // span(wick + scaled) inside the cox kernel
    int rep_s = -1;
};

struct MainReport {
    int n = 0;
    uint64_t seed = 0;
    SampledData data;
    std::vector<DegreeReport> degrees;
    bool verdict = false;
    int translates_used = 2;
    bool representative_dims_ok = true;  // quotient at N_s equals 2^(s-1), resp. 1 at N_0
    std::map<std::string, double> timings_ms;
};

/// The main-theorem harness: samples a generic configuration plus y, c,
/// then compares the Cox kernel with the span of Wick quadrics and their
/// a(c)-translates in every quadratic multidegree. If some degree falls
/// short and max_translates allows, further translates a(c') are added and
/// the count used is reported.
MainReport check_main(int n, uint64_t seed, long bound = 1000, int max_translates = 2,
                      int jobs = 1);

/// Variant pinning y = c (the degenerate two-translate choice); used as a
/// negative control.
MainReport check_main_degenerate(int n, uint64_t seed, long bound = 1000);

/// Draws affine chart coordinates y_1..y_(n-2) whose standard-rows lift lies
/// in G(p) for p = gale_dual(cfg), retrying until generic.
std::vector<Rational> sample_y_affine(const Configuration& cfg, Rng& rng, long bound);

/// Lemma 4.1 content for one subset: pfaff(M_B) is nonzero and vanishes to
/// order >= s-1 at Q_n along `trials` random directions.
bool vanishing_order_check(const Configuration& cfg, const std::vector<Rational>& y_affine,
                           const EvenSubset& B, int trials, Rng& rng, long bound);

/// Companion degree/multiplicity checks: deg_x pfaff(M_B) = s - [n in B] and
/// the vanishing multiplicity at each Q_i, i <= n-1, is at least
/// (s - [n in B]) - [i in B].
bool membership_degree_check(const Configuration& cfg, const std::vector<Rational>& y_affine,
                             const EvenSubset& B, int trials, Rng& rng, long bound);

}  // namespace coxspin
