#include "chev/poly2.hpp"

#include <stdexcept>

namespace chev {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in polynomial arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in polynomial arithmetic");
    return r;
}

}  // namespace

Poly2 Poly2::constant(std::int64_t c) { return monomial(c, 0, 0); }

Poly2 Poly2::monomial(std::int64_t c, int i, int j) {
    Poly2 p;
    p.add_term({i, j}, c);
    return p;
}

void Poly2::add_term(Monomial m, std::int64_t c) {
    if (c == 0) return;
    auto& v = terms_[m];
    v = checked_add(v, c);
    if (v == 0) terms_.erase(m);
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (auto [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (auto [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    for (auto [m1, c1] : terms_)
        for (auto [m2, c2] : o.terms_) r.add_term({m1.first + m2.first, m1.second + m2.second}, checked_mul(c1, c2));
    return r;
}

std::int64_t Poly2::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t Poly2::evaluate(std::int64_t t, std::int64_t u) const {
    std::int64_t s = 0;
    for (auto [m, c] : terms_) {
        std::int64_t v = c;
        for (int k = 0; k < m.first; ++k) v = checked_mul(v, t);
        for (int k = 0; k < m.second; ++k) v = checked_mul(v, u);
        s = checked_add(s, v);
    }
    return s;
}

std::string Poly2::format() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto [m, c] : terms_) {
        std::string mono;
        if (m.first) mono += m.first == 1 ? "t" : "t^" + std::to_string(m.first);
        if (m.second) mono += m.second == 1 ? "u" : "u^" + std::to_string(m.second);
        std::string coef = std::to_string(c);
        if (!mono.empty() && (c == 1 || c == -1)) coef = c == 1 ? "" : "-";
        std::string term = coef + mono;
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

PolyMat PolyMat::identity(std::size_t n) {
    PolyMat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly2::constant(1);
    return m;
}

PolyMat PolyMat::exp_series(const std::vector<IntMat>& divided, std::int64_t c, int i, int j) {
    const std::size_t n = divided[0].n();
    PolyMat m(n);
    std::int64_t ck = 1;
    for (std::size_t k = 0; k < divided.size(); ++k) {
        const int ki = static_cast<int>(k);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s)
                if (divided[k](r, s))
                    m(r, s) = m(r, s) + Poly2::monomial(checked_mul(ck, divided[k](r, s)), ki * i, ki * j);
        ck = checked_mul(ck, c);
    }
    return m;
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
    PolyMat r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Poly2& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (!o(k, j).is_zero()) r(i, j) = r(i, j) + x * o(k, j);
        }
    return r;
}

bool PolyMat::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (!((*this)(i, j) == (i == j ? Poly2::constant(1) : Poly2()))) return false;
    return true;
}

IntMat PolyMat::coefficient(int i, int j) const {
    IntMat m(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) m(r, c) = (*this)(r, c).coeff(i, j);
    return m;
}

IntMat PolyMat::evaluate(std::int64_t t, std::int64_t u) const {
    IntMat m(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) m(r, c) = (*this)(r, c).evaluate(t, u);
    return m;
}

}  // namespace chev
