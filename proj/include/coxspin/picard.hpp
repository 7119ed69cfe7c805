#pragma once

#include <vector>

#include "coxspin/rational.hpp"
#include "coxspin/subsets.hpp"

namespace coxspin {

/// A class in Pic(X_n) = Z H + Z E_1 + ... + Z E_n, with rational
/// coefficients so that quarter-canonical classes fit in the same type.
/// The intersection form is H^2 = n-4, E_i.E_j = -delta_ij, H.E_j = 0.
struct PicClass {
    int n = 0;
    std::vector<Rational> c;  // size n+1: coefficient of H, then E_1..E_n

    PicClass() = default;
    PicClass(int n_, std::vector<Rational> coeffs) : n(n_), c(std::move(coeffs)) {}

    friend auto operator<=>(const PicClass&, const PicClass&) = default;

    PicClass operator+(const PicClass& o) const;
    PicClass operator-(const PicClass& o) const;
    PicClass operator*(const Rational& s) const;
};

PicClass pic_H(int n);
PicClass pic_E(int n, int i);      // 1-based
PicClass pic_K(int n);             // -(n-2)H + (n-4)(E_1+...+E_n)
PicClass pic_delta(int n);         // H - E_1 - ... - E_n

Rational intersect(const PicClass& a, const PicClass& b);

/// Simple roots alpha_1..alpha_n of the D_n root system inside Pic.
std::vector<PicClass> simple_roots(int n);

/// Reflection in a root of square -2: D + (D.alpha) alpha.
PicClass reflect(const PicClass& d, const PicClass& alpha);

/// Orbit of D under the n simple reflections (breadth-first closure).
std::vector<PicClass> weyl_orbit(const PicClass& d, int n);

/// The (-1)-divisor class attached to an even subset B.
PicClass divisor_D(const EvenSubset& B);

/// A weight in the span of L_1..L_n with the form L_i.L_j = -delta_ij.
struct WeightVector {
    int n = 0;
    std::vector<Rational> c;  // size n: coefficient of L_1..L_n

    WeightVector() = default;
    WeightVector(int n_, std::vector<Rational> coeffs) : n(n_), c(std::move(coeffs)) {}

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

Rational weight_form(const WeightVector& a, const WeightVector& b);

/// Simple roots beta_1..beta_n of so_{2n} in the L-basis.
std::vector<WeightVector> so_simple_roots(int n);

/// The half-spin weight W(B) = (sum_{i in B} L_i - sum_{i not in B} L_i)/2.
WeightVector weight_W(const EvenSubset& B);

/// The isometry T with T(beta_i) = alpha_i, extended linearly; concretely
/// T(L_i) = E_i + Delta/2 for i < n and T(L_n) = -E_n - Delta/2.
PicClass apply_T(const WeightVector& w);

struct WeightAndImage {
    WeightVector W;
    PicClass TofW;
};

WeightAndImage weight_and_T(const EvenSubset& B);

}  // namespace coxspin
