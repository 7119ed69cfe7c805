#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace coxspin {

/// An even-cardinality subset of [1, n], kept sorted. The empty set is valid.
struct EvenSubset {
    int n = 0;
    std::vector<int> elems;  // strictly increasing, values in [1, n]

    EvenSubset() = default;
    EvenSubset(int ambient, std::vector<int> sorted_elems);

    size_t size() const { return elems.size(); }
    bool empty() const { return elems.empty(); }
    bool contains(int b) const;

    std::string str() const;  // "{2,3,5,6}" or "{}"

    friend auto operator<=>(const EvenSubset&, const EvenSubset&) = default;
};

/// All 2^(n-1) even subsets of [n], ordered by size then lexicographically.
std::vector<EvenSubset> even_subsets(int n);

/// A perfect matching of an even subset, written with pairs (i,j), i < j,
/// listed by increasing i. The sign is that of the permutation taking the
/// sorted subset to the concatenated pair sequence.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    int sign = 1;

    friend bool operator==(const Matching&, const Matching&) = default;
};

/// All (|B|-1)!! perfect matchings of B with their signs. |B| = 0 yields the
/// single empty matching with sign +1.
std::vector<Matching> matchings_with_sign(const EvenSubset& B);

/// Sign of the permutation taking `from` to `to` (same multiset, distinct
/// entries). Used as the independent oracle for matching signs.
int permutation_sign(const std::vector<int>& from, const std::vector<int>& to);

enum class YoungOrder { GreaterEqual, LessEqual, Equal, Incomparable };

/// The restriction of Young's lattice to even subsets: sigma >= tau iff
/// #sigma >= #tau and sigma_i <= tau_i for i = 1..#tau.
YoungOrder young_compare(const EvenSubset& sigma, const EvenSubset& tau);

/// All unordered incomparable pairs, each listed once with the
/// lexicographically smaller subset first.
std::vector<std::pair<EvenSubset, EvenSubset>> incomparable_pairs(int n);

/// Fixed linear extension of the Young order: decreasing cardinality, then
/// lexicographically increasing elements. chain[0] is the largest variable
/// (the full set for even n), chain.back() is the empty set.
std::vector<EvenSubset> spin_variable_chain(int n);

/// Position of B in spin_variable_chain(B.n); 0 is the largest variable.
int spin_rank(const EvenSubset& B);

}  // namespace coxspin
