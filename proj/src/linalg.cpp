#include "coxspin/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace coxspin {

namespace {

// Clears denominators row by row; the row space, rank and kernel are
// unchanged under nonzero row scaling.
std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& m,
                                                 std::vector<mpz_class>* scales = nullptr) {
    std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (size_t j = 0; j < m.cols(); ++j) {
            mpq_class scaled = m.at(i, j) * Rational(l);
            rows[i][j] = scaled.get_num();
        }
        if (scales) scales->push_back(l);
    }
    return rows;
}

}  // namespace

KernelResult kernel_and_rank(const RationalMatrix& m) {
    const size_t nr = m.rows(), nc = m.cols();
    auto a = integer_rows(m);

    // Bareiss fraction-free row echelon form.
    std::vector<size_t> pivot_col;
    mpz_class prev = 1;
    size_t r = 0;
    for (size_t col = 0; col < nc && r < nr; ++col) {
        size_t piv = r;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        if (piv != r) std::swap(a[piv], a[r]);
        for (size_t i = r + 1; i < nr; ++i) {
            for (size_t j = col + 1; j < nc; ++j) {
                mpz_class t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        pivot_col.push_back(col);
        ++r;
    }

    KernelResult res;
    res.rank = r;
    std::vector<bool> is_pivot(nc, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    for (size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(nc, Rational(0));
        v[f] = 1;
        for (size_t k = r; k-- > 0;) {
            size_t pc = pivot_col[k];
            Rational s(0);
            for (size_t j = pc + 1; j < nc; ++j)
                if (v[j] != 0) s += Rational(a[k][j]) * v[j];
            v[pc] = -s / Rational(a[k][pc]);
        }
        res.kernel.push_back(std::move(v));
    }
    return res;
}

size_t rank_rational(const RationalMatrix& m) {
    const size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc));
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) a[i][j] = m.at(i, j);

    size_t r = 0;
    for (size_t col = 0; col < nc && r < nr; ++col) {
        size_t piv = nr;
        for (size_t i = r; i < nr; ++i) {
            if (a[i][col] == 0) continue;
            if (piv == nr || abs(a[i][col]) > abs(a[piv][col])) piv = i;
        }
        if (piv == nr) continue;
        std::swap(a[piv], a[r]);
        Rational inv = a[r][col];
        for (size_t i = 0; i < nr; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rational f = a[i][col] / inv;
            for (size_t j = col; j < nc; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return Rational(1);

    std::vector<mpz_class> scales;
    auto a = integer_rows(m, &scales);

    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return Rational(0);
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational det(a[n - 1][n - 1] * sign);
    for (const auto& s : scales) det /= Rational(s);
    return det;
}

}  // namespace coxspin
