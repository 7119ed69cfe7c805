#pragma once

#include <cstddef>
#include <vector>

#include "coxspin/rational.hpp"

namespace coxspin {

/// Dense matrix of exact rationals.
class RationalMatrix {
  public:
    RationalMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  private:
    size_t rows_, cols_;
    std::vector<Rational> data_;
};

struct KernelResult {
    size_t rank = 0;
    std::vector<std::vector<Rational>> kernel;  // basis of the right null space
};

/// Exact rank and kernel basis. Rows are scaled to integers, reduced by
/// Bareiss fraction-free elimination (pivot: first nonzero in column order),
/// and the kernel is recovered by rational back-substitution. Satisfies
/// rank + kernel.size() == cols exactly.
KernelResult kernel_and_rank(const RationalMatrix& m);

/// Rank by plain rational Gauss-Jordan with largest-pivot selection; an
/// independent second route used to cross-check kernel_and_rank.
size_t rank_rational(const RationalMatrix& m);

/// Exact determinant of a square matrix (fraction-free after row scaling).
Rational determinant(const RationalMatrix& m);

}  // namespace coxspin
