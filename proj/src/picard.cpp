#include "coxspin/picard.hpp"

#include <set>
#include <stdexcept>

namespace coxspin {

namespace {

void check_same(const PicClass& a, const PicClass& b) {
    if (a.n != b.n) throw std::invalid_argument("Pic classes with different n");
}

}  // namespace

PicClass PicClass::operator+(const PicClass& o) const {
    check_same(*this, o);
    PicClass r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

PicClass PicClass::operator-(const PicClass& o) const {
    check_same(*this, o);
    PicClass r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

PicClass PicClass::operator*(const Rational& s) const {
    PicClass r = *this;
    for (auto& v : r.c) v *= s;
    return r;
}

PicClass pic_H(int n) {
    PicClass d(n, std::vector<Rational>(n + 1, Rational(0)));
    d.c[0] = 1;
    return d;
}

PicClass pic_E(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("pic_E index out of range");
    PicClass d(n, std::vector<Rational>(n + 1, Rational(0)));
    d.c[i] = 1;
    return d;
}

PicClass pic_K(int n) {
    PicClass d(n, std::vector<Rational>(n + 1, Rational(n - 4)));
    d.c[0] = -(n - 2);
    return d;
}

PicClass pic_delta(int n) {
    PicClass d(n, std::vector<Rational>(n + 1, Rational(-1)));
    d.c[0] = 1;
    return d;
}

Rational intersect(const PicClass& a, const PicClass& b) {
    check_same(a, b);
    Rational r = a.c[0] * b.c[0] * Rational(a.n - 4);
    for (int i = 1; i <= a.n; ++i) r -= a.c[i] * b.c[i];
    return r;
}

std::vector<PicClass> simple_roots(int n) {
    std::vector<PicClass> roots;
    for (int i = 1; i <= n - 1; ++i) roots.push_back(pic_E(n, i) - pic_E(n, i + 1));
    PicClass an = pic_H(n);
    for (int i = 1; i <= n - 2; ++i) an = an - pic_E(n, i);
    roots.push_back(an);
    return roots;
}

PicClass reflect(const PicClass& d, const PicClass& alpha) {
    return d + alpha * intersect(d, alpha);
}

std::vector<PicClass> weyl_orbit(const PicClass& d, int n) {
    auto roots = simple_roots(n);
    std::set<PicClass> seen{d};
    std::vector<PicClass> queue{d};
    while (!queue.empty()) {
        PicClass cur = queue.back();
        queue.pop_back();
        for (const auto& a : roots) {
            PicClass next = reflect(cur, a);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

PicClass divisor_D(const EvenSubset& B) {
    const int n = B.n;
    const int s = static_cast<int>(B.size()) / 2;
    PicClass d(n, std::vector<Rational>(n + 1, Rational(0)));
    if (!B.contains(n)) {
        d = pic_delta(n) * Rational(s);
        for (int b : B.elems) d = d + pic_E(n, b);
        d = d + pic_E(n, n);
    } else {
        d = pic_delta(n) * Rational(s - 1);
        for (int b : B.elems)
            if (b != n) d = d + pic_E(n, b);
    }
    return d;
}

Rational weight_form(const WeightVector& a, const WeightVector& b) {
    if (a.n != b.n) throw std::invalid_argument("weights with different n");
    Rational r(0);
    for (int i = 0; i < a.n; ++i) r -= a.c[i] * b.c[i];
    return r;
}

std::vector<WeightVector> so_simple_roots(int n) {
    std::vector<WeightVector> roots;
    for (int i = 1; i <= n - 2; ++i) {
        WeightVector w(n, std::vector<Rational>(n, Rational(0)));
        w.c[i - 1] = 1;
        w.c[i] = -1;
        roots.push_back(std::move(w));
    }
    WeightVector plus(n, std::vector<Rational>(n, Rational(0)));
    plus.c[n - 2] = 1;
    plus.c[n - 1] = 1;
    roots.push_back(std::move(plus));
    WeightVector minus(n, std::vector<Rational>(n, Rational(0)));
    minus.c[n - 2] = 1;
    minus.c[n - 1] = -1;
    roots.push_back(std::move(minus));
    return roots;
}

WeightVector weight_W(const EvenSubset& B) {
    WeightVector w(B.n, std::vector<Rational>(B.n, Rational(-1, 2)));
    for (int b : B.elems) w.c[b - 1] = Rational(1, 2);
    return w;
}

PicClass apply_T(const WeightVector& w) {
    const int n = w.n;
    PicClass half_delta = pic_delta(n) * Rational(1, 2);
    PicClass out(n, std::vector<Rational>(n + 1, Rational(0)));
    for (int i = 1; i <= n - 1; ++i) out = out + (pic_E(n, i) + half_delta) * w.c[i - 1];
    out = out + (pic_E(n, n) + half_delta) * (-w.c[n - 1]);
    return out;
}

WeightAndImage weight_and_T(const EvenSubset& B) {
    WeightAndImage r;
    r.W = weight_W(B);
    r.TofW = apply_T(r.W);
    return r;
}

}  // namespace coxspin
