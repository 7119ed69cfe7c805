#include "coxspin/pfaffian.hpp"

#include <stdexcept>

namespace coxspin {

void SkewMatrix::set(int i, int j, Polynomial entry) {
    if (i < 1 || j < 1 || i > n_ || j > n_ || i == j)
        throw std::invalid_argument("SkewMatrix::set: bad index");
    if (i < j)
        upper_[{i, j}] = std::move(entry);
    else
        upper_[{j, i}] = -std::move(entry);
}

Polynomial SkewMatrix::get(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("SkewMatrix::get: bad index");
    if (i == j) return Polynomial();
    auto it = upper_.find(i < j ? std::make_pair(i, j) : std::make_pair(j, i));
    if (it == upper_.end()) return Polynomial();
    return i < j ? it->second : -it->second;
}

Polynomial sub_pfaffian(const SkewMatrix& a, const EvenSubset& B) {
    for (int b : B.elems)
        if (b > a.size()) throw std::invalid_argument("sub_pfaffian: subset exceeds matrix size");
    Polynomial result;
    for (const auto& mu : matchings_with_sign(B)) {
        Polynomial prod(Rational(mu.sign));
        for (auto [i, j] : mu.pairs) prod *= a.get(i, j);
        result += prod;
    }
    return result;
}

Polynomial pfaffian(const SkewMatrix& a) {
    if (a.size() % 2 != 0) throw std::invalid_argument("pfaffian requires even size");
    std::vector<int> all;
    for (int i = 1; i <= a.size(); ++i) all.push_back(i);
    return sub_pfaffian(a, EvenSubset(a.size(), all));
}

namespace {

// pf(S) = sum_k (-1)^k A(s_1, s_k) pf(S \ {s_1, s_k}), memoized on S.
const Polynomial& pf_memo(const SkewMatrix& a, const std::vector<int>& s,
                          std::map<std::vector<int>, Polynomial>& memo) {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    Polynomial result;
    if (s.empty()) {
        result = Polynomial(Rational(1));
    } else {
        for (size_t k = 1; k < s.size(); ++k) {
            std::vector<int> rest;
            for (size_t t = 1; t < s.size(); ++t)
                if (t != k) rest.push_back(s[t]);
            Polynomial term = a.get(s[0], s[k]) * pf_memo(a, rest, memo);
            if (k % 2 == 0)
                result -= term;
            else
                result += term;
        }
    }
    return memo.emplace(s, std::move(result)).first->second;
}

}  // namespace

std::map<EvenSubset, Polynomial> all_sub_pfaffians(const SkewMatrix& a) {
    std::map<std::vector<int>, Polynomial> memo;
    std::map<EvenSubset, Polynomial> out;
    for (const auto& B : even_subsets(a.size())) out.emplace(B, pf_memo(a, B.elems, memo));
    return out;
}

}  // namespace coxspin
