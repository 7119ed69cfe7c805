#include "coxspin/subsets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coxspin {

EvenSubset::EvenSubset(int ambient, std::vector<int> sorted_elems)
    : n(ambient), elems(std::move(sorted_elems)) {
    if (elems.size() % 2 != 0) throw std::invalid_argument("subset has odd cardinality");
    for (size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 1 || elems[i] > n) throw std::invalid_argument("subset element out of range");
        if (i > 0 && elems[i] <= elems[i - 1])
            throw std::invalid_argument("subset elements not strictly increasing");
    }
}

bool EvenSubset::contains(int b) const {
    return std::binary_search(elems.begin(), elems.end(), b);
}

std::string EvenSubset::str() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < elems.size(); ++i) {
        if (i) os << ',';
        os << elems[i];
    }
    os << '}';
    return os.str();
}

std::vector<EvenSubset> even_subsets(int n) {
    if (n < 1) throw std::invalid_argument("even_subsets requires n >= 1");
    std::vector<std::vector<int>> all;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        std::vector<int> e;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) e.push_back(i + 1);
        all.push_back(std::move(e));
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<EvenSubset> out;
    out.reserve(all.size());
    for (auto& e : all) out.emplace_back(n, std::move(e));
    return out;
}

int permutation_sign(const std::vector<int>& from, const std::vector<int>& to) {
    if (from.size() != to.size()) throw std::invalid_argument("permutation_sign size mismatch");
    int inversions = 0;
    std::vector<size_t> pos(to.size());
    for (size_t i = 0; i < to.size(); ++i) {
        auto it = std::find(from.begin(), from.end(), to[i]);
        if (it == from.end()) throw std::invalid_argument("permutation_sign: not a rearrangement");
        pos[i] = static_cast<size_t>(it - from.begin());
    }
    for (size_t i = 0; i < pos.size(); ++i)
        for (size_t j = i + 1; j < pos.size(); ++j)
            if (pos[i] > pos[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {

void enumerate_matchings(std::vector<int> remaining, std::vector<std::pair<int, int>>& acc,
                         const std::vector<int>& sorted, std::vector<Matching>& out) {
    if (remaining.empty()) {
        std::vector<int> concat;
        for (auto& [i, j] : acc) {
            concat.push_back(i);
            concat.push_back(j);
        }
        out.push_back(Matching{acc, permutation_sign(sorted, concat)});
        return;
    }
    int first = remaining.front();
    for (size_t k = 1; k < remaining.size(); ++k) {
        std::vector<int> rest;
        for (size_t t = 1; t < remaining.size(); ++t)
            if (t != k) rest.push_back(remaining[t]);
        acc.emplace_back(first, remaining[k]);
        enumerate_matchings(std::move(rest), acc, sorted, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Matching> matchings_with_sign(const EvenSubset& B) {
    std::vector<Matching> out;
    if (B.empty()) {
        out.push_back(Matching{{}, 1});
        return out;
    }
    std::vector<std::pair<int, int>> acc;
    enumerate_matchings(B.elems, acc, B.elems, out);
    return out;
}

YoungOrder young_compare(const EvenSubset& sigma, const EvenSubset& tau) {
    if (sigma.n != tau.n) throw std::invalid_argument("young_compare: ambient size mismatch");
    if (sigma == tau) return YoungOrder::Equal;
    auto geq = [](const EvenSubset& a, const EvenSubset& b) {
        if (a.size() < b.size()) return false;
        for (size_t i = 0; i < b.size(); ++i)
            if (a.elems[i] > b.elems[i]) return false;
        return true;
    };
    bool ge = geq(sigma, tau), le = geq(tau, sigma);
    if (ge) return YoungOrder::GreaterEqual;
    if (le) return YoungOrder::LessEqual;
    return YoungOrder::Incomparable;
}

std::vector<std::pair<EvenSubset, EvenSubset>> incomparable_pairs(int n) {
    auto subs = even_subsets(n);
    std::vector<std::pair<EvenSubset, EvenSubset>> out;
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = i + 1; j < subs.size(); ++j)
            if (young_compare(subs[i], subs[j]) == YoungOrder::Incomparable) {
                if (subs[i] < subs[j])
                    out.emplace_back(subs[i], subs[j]);
                else
                    out.emplace_back(subs[j], subs[i]);
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EvenSubset> spin_variable_chain(int n) {
    auto subs = even_subsets(n);
    std::sort(subs.begin(), subs.end(), [](const EvenSubset& a, const EvenSubset& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.elems < b.elems;
    });
    return subs;
}

int spin_rank(const EvenSubset& B) {
    auto chain = spin_variable_chain(B.n);
    auto it = std::find(chain.begin(), chain.end(), B);
    if (it == chain.end()) throw std::logic_error("spin_rank: subset not in chain");
    return static_cast<int>(it - chain.begin());
}

}  // namespace coxspin
