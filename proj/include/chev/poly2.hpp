#pragma once

// Integer polynomials in two variables t, u and square matrices over them,
// enough to expand commutators of root elements symbolically.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chev/matrix.hpp"

namespace chev {

class Poly2 {
  public:
    using Monomial = std::pair<int, int>;  // (deg t, deg u)

    Poly2() = default;
    static Poly2 constant(std::int64_t c);
    static Poly2 monomial(std::int64_t c, int i, int j);

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator-() const;
    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int i, int j) const;
    const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
    std::int64_t evaluate(std::int64_t t, std::int64_t u) const;
    std::string format() const;

  private:
    void add_term(Monomial m, std::int64_t c);
    std::map<Monomial, std::int64_t> terms_;
};

class PolyMat {
  public:
    PolyMat() = default;
    explicit PolyMat(std::size_t n) : n_(n), a_(n * n) {}
    static PolyMat identity(std::size_t n);
    /// sum_k (c t^i u^j)^k D_k for divided powers D_k.
    static PolyMat exp_series(const std::vector<IntMat>& divided, std::int64_t c, int i, int j);

    std::size_t n() const { return n_; }
    Poly2& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const Poly2& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
    PolyMat operator*(const PolyMat& o) const;
    bool is_identity() const;
    /// Integer matrix of the coefficients of t^i u^j.
    IntMat coefficient(int i, int j) const;
    IntMat evaluate(std::int64_t t, std::int64_t u) const;

  private:
    std::size_t n_ = 0;
    std::vector<Poly2> a_;
};

}  // namespace chev
