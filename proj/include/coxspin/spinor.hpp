#pragma once

#include <map>
#include <utility>
#include <vector>

#include "coxspin/config.hpp"
#include "coxspin/pfaffian.hpp"
#include "coxspin/polynomial.hpp"
#include "coxspin/subsets.hpp"

namespace coxspin {

/// Z^(n+1) multidegree: entry 0 counts total degree in the spin variables,
/// entry j the occurrences of index j across the f-subscripts.
using Multidegree = std::vector<int>;

/// deg(f_A f_B) = 2 e_0 + sum_{j in A} e_j + sum_{j in B} e_j.
Multidegree multidegree(const EvenSubset& A, const EvenSubset& B);

/// An unordered degree-2 monomial f_A f_B (A = B allowed), stored with the
/// lexicographically smaller subset first.
struct SpinMonomial {
    EvenSubset a, b;

    SpinMonomial() = default;
    SpinMonomial(EvenSubset x, EvenSubset y);

    friend auto operator<=>(const SpinMonomial&, const SpinMonomial&) = default;
};

/// A quadratic form in the spin variables with rational coefficients. Every
/// generated quadric is multihomogeneous: all monomials share one
/// multidegree.
class Quadric {
  public:
    using TermMap = std::map<SpinMonomial, Rational>;

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add(const SpinMonomial& m, const Rational& c);
    Rational coefficient(const SpinMonomial& m) const;

    Multidegree degree() const;  // requires a nonzero multihomogeneous quadric

    Quadric operator*(const Rational& c) const;
    Quadric operator-() const { return *this * Rational(-1); }

    friend bool operator==(const Quadric&, const Quadric&) = default;

  private:
    TermMap terms_;
};

/// The quadratic Grassmann-Pluecker relation attached to two odd-cardinality
/// subsets, with alternating index lists normalized by sorting and
/// repeated-index terms dropped. Overlapping pairs are allowed; they carry
/// the relations whose multidegree has a doubled index. The result is scaled
/// so its leading coefficient is +1 (zero quadrics stay zero).
Quadric wick_quadric(const std::vector<int>& sigma, const std::vector<int>& tau, int n);

/// All nonzero Wick quadrics over unordered pairs of distinct odd subsets,
/// deduplicated up to scalar, in a deterministic order.
std::vector<Quadric> all_wick_quadrics(int n);

/// Initial-ideal generators: one monomial f_sigma f_tau per incomparable
/// pair in the Young order.
std::vector<SpinMonomial> initial_ideal_gens(int n);

/// Leading monomial in the reverse-lexicographic order induced by the fixed
/// linear extension of Young's lattice.
SpinMonomial leading_monomial(const Quadric& q);

/// Reverse-lex comparison of degree-2 spin monomials: true if a > b.
bool spin_monomial_greater(const SpinMonomial& a, const SpinMonomial& b);

/// Scales the quadric coefficientwise: the term at f_A f_B is multiplied by
/// a_A a_B. All scaling entries must be nonzero.
Quadric scale_quadric(const Quadric& q, const ScalingVector& a);

/// Substitutes polynomials for the spin variables and expands.
Polynomial evaluate_quadric(const Quadric& q, const std::map<EvenSubset, Polynomial>& subs);

/// The generic skew matrix (z_ij) on [n].
SkewMatrix generic_skew(int n);

struct QuadricSpace {
    size_t dim = 0;
    std::vector<Quadric> basis;
    std::vector<SpinMonomial> monomials;  // the degree-d monomial basis used
};

/// Brute-force oracle for the degree-d quadratic part of the spinor ideal:
/// the kernel of f_B -> subpfaffian(z, B) restricted to the span of the
/// degree-d monomials, by exact linear algebra.
QuadricSpace spinor_quadric_oracle(int n, const Multidegree& d);

/// All monomials f_A f_B of the given multidegree, in deterministic order.
std::vector<SpinMonomial> monomials_of_degree(int n, const Multidegree& d);

}  // namespace coxspin
