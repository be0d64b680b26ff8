#pragma once

// Square matrices over a finite Ring (Mat) and over the integers (IntMat).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chev/ring.hpp"

namespace chev {

class IntMat {
  public:
    IntMat() = default;
    explicit IntMat(std::size_t n) : n_(n), a_(n * n, 0) {}
    static IntMat identity(std::size_t n);
    static IntMat unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t n() const { return n_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const std::vector<std::int64_t>& data() const { return a_; }

    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator*(const IntMat& o) const;
    IntMat operator*(std::int64_t s) const;
    IntMat operator-() const { return *this * -1; }
    bool operator==(const IntMat& o) const { return n_ == o.n_ && a_ == o.a_; }
    IntMat transpose() const;
    bool is_zero() const;
    std::int64_t trace() const;
    std::size_t nonzero_count() const;
    /// Exact division of every entry; nullopt when some entry is not divisible.
    std::optional<IntMat> divide_exact(std::int64_t d) const;
    std::string format() const;

  private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> a_;
};

inline IntMat commutator(const IntMat& a, const IntMat& b) { return a * b - b * a; }

class Mat {
  public:
    Mat() = default;
    Mat(Ring r, std::size_t n) : ring_(std::move(r)), n_(n), a_(n * n, 0) {}
    Mat(Ring r, std::size_t n, std::vector<Elem> entries);
    static Mat identity(const Ring& r, std::size_t n);
    static Mat scalar(const Ring& r, std::size_t n, Elem s);
    static Mat from_int(const Ring& r, const IntMat& m);

    const Ring& ring() const { return ring_; }
    std::size_t n() const { return n_; }
    Elem& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const std::vector<Elem>& data() const { return a_; }
    std::vector<Elem>& data() { return a_; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(Elem s) const;
    bool operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    bool is_zero() const;
    bool is_identity() const;
    bool is_diagonal() const;
    std::size_t nonzero_count() const;

    /// Characteristic polynomial coefficients of det(lambda I - A), highest
    /// degree first (division-free).
    std::vector<Elem> charpoly() const;
    Elem det() const;
    std::optional<Mat> inverse() const;
    /// Inverse or RingError.
    Mat inv() const;
    /// Entrywise image under a ring map into its destination ring.
    Mat map(const RingHom& h) const;

    std::size_t hash() const;
    std::string format() const;

  private:
    Ring ring_;
    std::size_t n_ = 0;
    std::vector<Elem> a_;
};

struct MatHash {
    std::size_t operator()(const Mat& m) const { return m.hash(); }
};

/// Group commutator a b a^-1 b^-1 given inverses.
Mat group_commutator(const Mat& a, const Mat& a_inv, const Mat& b, const Mat& b_inv);

}  // namespace chev
