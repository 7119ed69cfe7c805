#include "coxspin/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coxspin {

Monomial Monomial::of(Var v, uint32_t exp) {
    Monomial m;
    if (exp > 0) m.factors_.emplace_back(v, exp);
    return m;
}

uint32_t Monomial::degree() const {
    uint32_t d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

uint32_t Monomial::exponent(Var v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first)
            r.factors_.push_back(*a++);
        else if (b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    return r;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : factors_) {
        if (!first) os << '*';
        first = false;
        os << v.name();
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.factors() < b.factors();
}

Polynomial::Polynomial(Rational c) {
    if (c != 0) terms_.emplace(Monomial(), std::move(c));
}

Polynomial Polynomial::variable(Var v) { return term(Rational(1), Monomial::of(v)); }

Polynomial Polynomial::term(Rational coeff, Monomial m) {
    Polynomial p;
    if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

long Polynomial::degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.degree()));
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Rational& coeff, const Monomial& m) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ca * cb, ma * mb);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(uint32_t e) const {
    Polynomial r(Rational(1));
    for (uint32_t i = 0; i < e; ++i) r *= *this;
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << '-';
        first = false;
        Rational a = abs(c);
        if (a != 1 || m.is_one()) {
            os << a.get_str();
            if (!m.is_one()) os << '*';
        }
        if (!m.is_one()) os << m.str();
    }
    return os.str();
}

Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& bindings) {
    for (const auto& [v, repl] : bindings)
        for (const auto& [m, c] : repl.terms())
            for (const auto& [w, e] : m.factors())
                if (bindings.count(w))
                    throw std::invalid_argument("cyclic substitution: bound variable '" +
                                                w.name() + "' occurs in a replacement");
    Polynomial result;
    std::map<std::pair<Var, uint32_t>, Polynomial> powers;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term(c);
        Monomial untouched;
        for (const auto& [v, e] : m.factors()) {
            auto b = bindings.find(v);
            if (b == bindings.end()) {
                untouched = untouched * Monomial::of(v, e);
                continue;
            }
            auto key = std::make_pair(v, e);
            auto it = powers.find(key);
            if (it == powers.end()) it = powers.emplace(key, b->second.pow(e)).first;
            term *= it->second;
        }
        for (const auto& [tm, tc] : term.terms()) result.add_term(tc, tm * untouched);
    }
    return result;
}

std::optional<long> epsilon_order(const Polynomial& p, Var v) {
    if (p.is_zero()) return std::nullopt;
    long best = -1;
    for (const auto& [m, c] : p.terms()) {
        long e = m.exponent(v);
        if (best < 0 || e < best) best = e;
        if (best == 0) break;
    }
    return best;
}

}  // namespace coxspin
