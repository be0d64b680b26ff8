#include "chev/matrix.hpp"

#include <sstream>

#include "chev/kernels.hpp"

namespace chev {

// ---- IntMat ------------------------------------------------------------------

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::unit(std::size_t n, std::size_t i, std::size_t j) {
    IntMat m(n);
    m(i, j) = 1;
    return m;
}

IntMat IntMat::operator+(const IntMat& o) const {
    IntMat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
    IntMat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

IntMat IntMat::operator*(const IntMat& o) const {
    IntMat r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            std::int64_t x = a_[i * n_ + k];
            if (x == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) r.a_[i * n_ + j] += x * o.a_[k * n_ + j];
        }
    return r;
}

IntMat IntMat::operator*(std::int64_t s) const {
    IntMat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

IntMat IntMat::transpose() const {
    IntMat r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool IntMat::is_zero() const {
    for (auto x : a_)
        if (x) return false;
    return true;
}

std::int64_t IntMat::trace() const {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

std::size_t IntMat::nonzero_count() const {
    std::size_t c = 0;
    for (auto x : a_) c += x != 0;
    return c;
}

std::optional<IntMat> IntMat::divide_exact(std::int64_t d) const {
    IntMat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) {
        if (a_[k] % d != 0) return std::nullopt;
        r.a_[k] = a_[k] / d;
    }
    return r;
}

std::string IntMat::format() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

// ---- Mat -----------------------------------------------------------------------

Mat::Mat(Ring r, std::size_t n, std::vector<Elem> entries) : ring_(std::move(r)), n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw RingError("matrix entry count mismatch");
}

Mat Mat::identity(const Ring& r, std::size_t n) { return scalar(r, n, r.one()); }

Mat Mat::scalar(const Ring& r, std::size_t n, Elem s) {
    Mat m(r, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

Mat Mat::from_int(const Ring& r, const IntMat& m) {
    Mat out(r, m.n());
    for (std::size_t k = 0; k < m.data().size(); ++k) out.a_[k] = r.from_int(m.data()[k]);
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(ring_, n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = ring_.add(a_[k], o.a_[k]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(ring_, n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = ring_.sub(a_[k], o.a_[k]);
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    Mat r(ring_, n_);
    const std::uint64_t m = ring_.modulus();
    if (m != 0 && m < kernels::kMatmulModulusLimit) {
        kernels::matmul_mod(a_.data(), o.a_.data(), r.a_.data(), n_, static_cast<std::uint32_t>(m));
        return r;
    }
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            Elem x = a_[i * n_ + k];
            if (x == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                Elem y = o.a_[k * n_ + j];
                if (y == 0) continue;
                Elem& c = r.a_[i * n_ + j];
                c = ring_.add(c, ring_.mul(x, y));
            }
        }
    return r;
}

Mat Mat::scaled(Elem s) const {
    Mat r(ring_, n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = ring_.mul(a_[k], s);
    return r;
}

Mat Mat::transpose() const {
    Mat r(ring_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Mat::is_zero() const {
    for (auto x : a_)
        if (x) return false;
    return true;
}

bool Mat::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if ((*this)(i, j) != (i == j ? ring_.one() : 0)) return false;
    return true;
}

bool Mat::is_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

std::size_t Mat::nonzero_count() const {
    std::size_t c = 0;
    for (auto x : a_) c += x != 0;
    return c;
}

std::vector<Elem> Mat::charpoly() const {
    // Berkowitz: peel the top-left entry; p_A = T * p_{A'} with T the lower
    // triangular Toeplitz matrix of (1, -a, -R C, -R A' C, ...).
    const Ring& r = ring_;
    std::vector<Elem> p{r.one()};
    for (std::size_t start = n_; start-- > 0;) {
        const std::size_t m = n_ - start - 1;  // size of the trailing block A'
        const Elem a = (*this)(start, start);
        std::vector<Elem> toeplitz{r.one(), r.neg(a)};
        // v = C, then A' v, A'^2 v, ...
        std::vector<Elem> v(m);
        for (std::size_t i = 0; i < m; ++i) v[i] = (*this)(start + 1 + i, start);
        for (std::size_t step = 0; step < m; ++step) {
            Elem s = 0;
            for (std::size_t j = 0; j < m; ++j) s = r.add(s, r.mul((*this)(start, start + 1 + j), v[j]));
            toeplitz.push_back(r.neg(s));
            std::vector<Elem> w(m, 0);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    w[i] = r.add(w[i], r.mul((*this)(start + 1 + i, start + 1 + j), v[j]));
            v = std::move(w);
        }
        std::vector<Elem> next(m + 2, 0);
        for (std::size_t i = 0; i < m + 2; ++i)
            for (std::size_t j = 0; j <= i && j < p.size(); ++j)
                if (i - j < toeplitz.size()) next[i] = r.add(next[i], r.mul(toeplitz[i - j], p[j]));
        p = std::move(next);
    }
    return p;
}

Elem Mat::det() const {
    auto p = charpoly();
    Elem c0 = p.back();
    return (n_ % 2 == 0) ? c0 : ring_.neg(c0);
}

std::optional<Mat> Mat::inverse() const {
    // Cayley-Hamilton: A (A^{n-1} + c_{n-1} A^{n-2} + ... + c_1) = -c_0.
    auto p = charpoly();
    auto c0inv = ring_.inverse(p.back());
    if (!c0inv) return std::nullopt;
    Mat acc = Mat::identity(ring_, n_);
    for (std::size_t k = 1; k < n_; ++k) acc = (*this) * acc + Mat::scalar(ring_, n_, p[k]);
    return acc.scaled(ring_.neg(*c0inv));
}

Mat Mat::inv() const {
    auto r = inverse();
    if (!r) throw RingError("matrix is not invertible over " + ring_.spec());
    return *r;
}

Mat Mat::map(const RingHom& h) const {
    Mat r(h.dst, n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = h(a_[k]);
    return r;
}

std::size_t Mat::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : a_) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::string Mat::format() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << ring_.format((*this)(i, j));
        os << "]\n";
    }
    return os.str();
}

Mat group_commutator(const Mat& a, const Mat& a_inv, const Mat& b, const Mat& b_inv) { return a * b * a_inv * b_inv; }

}  // namespace chev
