#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxspin/rational.hpp"
#include "coxspin/vars.hpp"

namespace coxspin {

/// A power product of variables. Stored as a sorted sparse exponent vector;
/// zero exponents are never kept, so equality is representation equality.
class Monomial {
  public:
    Monomial() = default;  // the monomial 1

    static Monomial of(Var v, uint32_t exp = 1);

    uint32_t degree() const;
    uint32_t exponent(Var v) const;
    bool is_one() const { return factors_.empty(); }

    Monomial operator*(const Monomial& o) const;

    const std::vector<std::pair<Var, uint32_t>>& factors() const { return factors_; }

    /// "x1^2*X2"; the empty monomial prints as "1".
    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }

  private:
    std::vector<std::pair<Var, uint32_t>> factors_;  // sorted by Var id
};

// Graded order, then lexicographic on the sparse exponent vectors. Any fixed
// total order would do; this one is the canonical storage order.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q. Zero coefficients are never stored,
/// so two polynomials are equal iff their term maps are equal.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    Polynomial() = default;  // zero
    explicit Polynomial(Rational c);
    explicit Polynomial(long c) : Polynomial(Rational(c)) {}

    static Polynomial variable(Var v);
    static Polynomial term(Rational coeff, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    size_t term_count() const { return terms_.size(); }

    /// Total degree; the zero polynomial has degree -1.
    long degree() const;

    Rational coefficient(const Monomial& m) const;
    const TermMap& terms() const { return terms_; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator*=(const Polynomial& o);
    Polynomial operator*(const Rational& c) const;

    void add_term(const Rational& coeff, const Monomial& m);

    Polynomial pow(uint32_t e) const;

    std::string str() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

  private:
    TermMap terms_;
};

/// Simultaneous substitution of polynomials for variables, fully expanded.
/// Bindings must be acyclic: no bound variable may occur in any replacement.
Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& bindings);

/// Minimum exponent of `v` over all terms; nullopt (= infinity) for the zero
/// polynomial, 0 as soon as one term omits `v`.
std::optional<long> epsilon_order(const Polynomial& p, Var v);

}  // namespace coxspin
