#pragma once

#include <map>
#include <vector>

#include "coxspin/polynomial.hpp"
#include "coxspin/subsets.hpp"

namespace coxspin {

/// Symbolic skew-symmetric matrix. Only the strict upper triangle is stored;
/// reading (j, i) with j > i negates, the diagonal is zero.
class SkewMatrix {
  public:
    explicit SkewMatrix(int n) : n_(n) {}

    int size() const { return n_; }

    void set(int i, int j, Polynomial entry);  // 1-based, i != j
    Polynomial get(int i, int j) const;

  private:
    int n_;
    std::map<std::pair<int, int>, Polynomial> upper_;
};

/// Pfaffian by the signed-matching expansion; requires even size, and the
/// empty matrix has Pfaffian 1.
Polynomial pfaffian(const SkewMatrix& a);

/// Pfaffian of the principal submatrix on rows/columns B.
Polynomial sub_pfaffian(const SkewMatrix& a, const EvenSubset& B);

/// All 2^(n-1) sub-Pfaffians of one matrix at once, via the first-row
/// expansion with sub-results shared across subsets.
std::map<EvenSubset, Polynomial> all_sub_pfaffians(const SkewMatrix& a);

}  // namespace coxspin
