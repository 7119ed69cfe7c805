#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxspin/rational.hpp"
#include "coxspin/subsets.hpp"

namespace coxspin {

/// Unrooted tree with leaves labeled 1..n, every internal vertex trivalent,
/// and positive rational edge lengths.
struct PhyloTree {
    struct Edge {
        int to;
        Rational len;
    };

    std::vector<std::vector<Edge>> adj;  // by vertex id
    std::map<int, int> leaf_vertex;      // leaf label -> vertex id

    int n_leaves() const { return static_cast<int>(leaf_vertex.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool is_leaf(int v) const { return degree(v) == 1; }

    int add_vertex();
    void add_edge(int u, int v, Rational len);
};

struct NewickParseError : std::runtime_error {
    size_t position;
    NewickParseError(const std::string& msg, size_t pos);
};

struct ValenceError : std::runtime_error {
    int vertex;
    ValenceError(const std::string& msg, int v);
};

/// Parses Newick with integer leaf labels and optional ":length" annotations
/// (default length 1). Throws NewickParseError on syntax errors and
/// ValenceError when the topology is not trivalent. Leaf labels must be
/// exactly 1..n.
PhyloTree parse_newick(const std::string& s);

/// Canonical Newick: rooted at the neighbor of leaf 1, children ordered by
/// smallest leaf label, lengths always printed.
std::string to_newick(const PhyloTree& t);

/// All (2n-5)!! trivalent topologies on leaves 1..n with unit edge lengths,
/// generated by leaf insertion, each exactly once. 3 <= n <= 7.
std::vector<PhyloTree> enumerate_trees(int n);

/// Pairwise leaf distances under the tree metric; d[i][j] for labels i, j
/// (1-based, diagonal zero).
std::vector<std::vector<Rational>> leaf_distances(const PhyloTree& t);

/// The unique partition of B into pairwise edge-disjoint leaf-to-leaf paths,
/// as a signed matching.
Matching disjoint_path_partition(const PhyloTree& t, const EvenSubset& B);

/// True iff the paths joining the pairs use no edge twice.
bool paths_edge_disjoint(const PhyloTree& t, const std::vector<std::pair<int, int>>& pairs);

struct BruteforceMin {
    Matching best;
    Rational total;
    bool unique = true;
};

/// Minimum total path length over all (|B|-1)!! matchings.
BruteforceMin min_weight_matching(const PhyloTree& t, const EvenSubset& B);

/// Copy of the tree with edge lengths replaced by distinct primes, used to
/// break accidental ties among non-optimal matchings.
PhyloTree with_prime_lengths(const PhyloTree& t);

struct LeadingForm {
    std::vector<std::pair<int, int>> pairs;  // (i_r, j_r), canonically sorted
    bool unique = true;                      // optimum was a strict minimum
};

/// Selects the minimum-weight monomial of the bi-Pluecker expansion of
/// Psi_B along a transversal of the disjoint-path partition: the bijection
/// minimizing the summed tree distances. A non-unique optimum is reported,
/// not repaired.
LeadingForm leading_form_psi(const EvenSubset& B, const PhyloTree& t);

}  // namespace coxspin
