#pragma once

#include <map>
#include <vector>

#include "coxspin/linalg.hpp"
#include "coxspin/pfaffian.hpp"
#include "coxspin/polynomial.hpp"
#include "coxspin/rng.hpp"
#include "coxspin/subsets.hpp"

namespace coxspin {

/// An n-point configuration in P^(n-3), in the chart where Q_1..Q_(n-2) are
/// the standard basis points, Q_(n-1) = [1:...:1] and Q_n = [q_1:...:q_(n-2)].
/// Validity needs every q_i nonzero, pairwise distinct and different from 1.
struct Configuration {
    int n = 0;
    std::vector<Rational> q;  // size n-2
};

void validate(const Configuration& cfg);  // throws std::invalid_argument

/// A 2 x n matrix representing a point of the Grassmannian cone Gr(2, n).
/// Row 0 is the "capital" row (P_i / X_i / Y_i), row 1 the lowercase one.
struct GrassmannPoint {
    int n = 0;
    std::vector<Rational> upper, lower;  // each of size n

    /// Pluecker coordinate upper_i lower_j - upper_j lower_i (any order).
    Rational plucker(int i, int j) const;  // 1-based
};

/// Builds the 2 x n matrix with rows (1,..,1,1,0) / (a_1,..,a_(n-2),0,1).
GrassmannPoint standard_rows(int n, const std::vector<Rational>& affine);

/// Gale dual of a configuration: the standard-rows matrix on cfg.q. Throws
/// if some Pluecker coordinate vanishes.
GrassmannPoint gale_dual(const Configuration& cfg);

/// Determinant of a square matrix of polynomials (memoized minor expansion;
/// intended for sizes up to 8).
Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m);

/// Psi_B(x, p) with numeric x: the exact determinant of the 2s x 2s matrix
/// V_B whose m-th row interleaves x_{b_m}, X_{b_m} with powers of p, P.
Rational psi_value(const EvenSubset& B, const GrassmannPoint& x, const GrassmannPoint& p);

/// Psi_B(x, p) with symbolic rows (X_1..X_n)/(x_1..x_n) and numeric p.
Polynomial psi_symbolic(const EvenSubset& B, const GrassmannPoint& p);

enum class RowFamily { XRows, YRows };

/// Psi_B with everything symbolic: the x-part runs over the chosen family
/// (X_i/x_i or Y_i/y_i) and the p-part over P_i/p_i.
Polynomial psi_full_symbolic(const EvenSubset& B, RowFamily fam);

/// All 2^(n-1) values Psi_B(x, p) of a numeric point at once.
std::map<EvenSubset, Rational> psi_all(const GrassmannPoint& x, const GrassmannPoint& p);

/// The skew matrix with entries (y_ij / p_ij) (X_i x_j - X_j x_i); the
/// denominators are absorbed into the rational coefficients.
SkewMatrix build_A(const GrassmannPoint& y, const GrassmannPoint& p);

/// F_B(x, y, p): the principal sub-Pfaffian of build_A on B.
Polynomial pfaffian_generator(const EvenSubset& B, const GrassmannPoint& y,
                              const GrassmannPoint& p);

/// The affine-chart skew matrix M over x_1..x_(n-2): entries
/// (x_j - x_i)(y_j - y_i)/(q_j - q_i) for i < j <= n-2, column n-1 equal to
/// -x_i y_i / q_i, and last column 1.
SkewMatrix build_M(const Configuration& cfg, const std::vector<Rational>& y_affine);

/// The substitution X_i -> 1 (i <= n-1), X_n -> 0, x_(n-1) -> 0, x_n -> 1
/// that carries build_A onto build_M.
std::map<Var, Polynomial> chart_bindings(int n);

/// Pfaffian-vs-determinant identity, fully symbolic: compares
/// F_B * prod p_ij (denominators cleared) with Psi_B(x,p) Psi_B(y,p) as
/// polynomials in all six variable families.
bool check_okada_symbolic(const EvenSubset& B);

/// Same identity at random rational rows; denominators are resampled until
/// nonzero. False means an implementation bug, never bad data.
bool check_okada_numeric(const EvenSubset& B, Rng& rng, long bound);

/// The cleared left-hand side: sum over matchings mu of B of
/// sign(mu) prod_{(a,b) in mu} x_ab y_ab prod_{pairs not in mu} p_ab.
Polynomial okada_lhs_cleared(const EvenSubset& B);

/// One matching monomial of the bi-Pluecker expansion: the pairs (i_r, j_r)
/// and the signed scalar sgn(sigma) prod_r prod_{m != r} p_{i_r j_m}.
struct BipluckerTerm {
    std::vector<std::pair<int, int>> pairs;
    Rational coeff;
};

/// The s! matching terms of the expansion of Psi_B along a transversal
/// i_list (half of B, distinct entries).
std::vector<BipluckerTerm> biplucker_terms(const EvenSubset& B, const std::vector<int>& i_list,
                                           const GrassmannPoint& p);

/// Bi-Pluecker expansion of Psi_B along a transversal: the sum of the
/// matching terms with each x_{ij} expanded into X/x variables. Equals
/// (-1)^(s(s+1)/2) Psi_B(x, p) for |B| = 2s, independent of the transversal
/// (measured across all subsets and transversals for n <= 8).
Polynomial biplucker_expand(const EvenSubset& B, const std::vector<int>& i_list,
                            const GrassmannPoint& p);

/// True iff Psi_B(c, p) != 0 for every even subset B.
bool genericity_check(const GrassmannPoint& c, const GrassmannPoint& p);

/// Diagonal torus point a(c) with a(c)_B = Psi_B(c,p) / Psi_B(y,p).
struct ScalingVector {
    std::map<EvenSubset, Rational> entries;
};

ScalingVector scaling_vector(const GrassmannPoint& c, const GrassmannPoint& y,
                             const GrassmannPoint& p);

/// Deterministic sampling of a valid configuration together with generic
/// auxiliary points y, c in G(p). Retries draws that violate a nonvanishing
/// condition and gives up after a fixed budget.
struct SampledData {
    Configuration cfg;
    GrassmannPoint p, y, c;
    int retries = 0;
};

SampledData sample_generic(int n, uint64_t seed, long bound);

}  // namespace coxspin
