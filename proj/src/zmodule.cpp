#include "chev/zmodule.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "chev/kernels.hpp"

namespace chev {

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
    std::int64_t t = 0, nt = 1, r = n, nr = a % n;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw std::logic_error("not invertible");
    return t < 0 ? t + n : t;
}

// s, t with s*a + t*b = gcd(a, b).
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
    std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    s = s0;
    t = t0;
    return a;
}

std::uint32_t reduce_mod(std::int64_t x, std::uint64_t m) {
    std::int64_t mm = static_cast<std::int64_t>(m);
    x %= mm;
    if (x < 0) x += mm;
    return static_cast<std::uint32_t>(x);
}

bool is_zero(const ZnVector& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

}  // namespace

ZnSubmodule::ZnSubmodule(std::uint64_t modulus, std::size_t dim) : m_(modulus), dim_(dim), pivots_(dim) {
    if (modulus < 2 || modulus > (1ull << 31)) throw std::invalid_argument("modulus out of range");
}

void ZnSubmodule::reduce_step(ZnVector& v, std::size_t col, const ZnVector& row) const {
    // v -= (v[col] / row[col]) * row, assuming divisibility.
    std::uint64_t q = v[col] / row[col];
    std::uint32_t f = reduce_mod(-static_cast<std::int64_t>(q), m_);
    kernels::axpy_mod(v.data(), row.data(), f, dim_, static_cast<std::uint32_t>(m_));
}

void ZnSubmodule::make_monic(ZnVector& v, std::size_t col) const {
    // Scale by a unit so the leading entry becomes gcd(v[col], m).
    std::int64_t m = static_cast<std::int64_t>(m_);
    std::int64_t b = v[col];
    std::int64_t g = std::gcd(b, m);
    if (b == g) return;
    std::int64_t mp = m / g;
    std::int64_t u = mp == 1 ? 1 : mod_inverse((b / g) % mp, mp);
    while (std::gcd(u, m) != 1) u += mp;
    ZnVector out(dim_, 0);
    kernels::axpy_mod(out.data(), v.data(), static_cast<std::uint32_t>(u % m), dim_, static_cast<std::uint32_t>(m_));
    v = std::move(out);
}

bool ZnSubmodule::insert(ZnVector v) {
    if (v.size() != dim_) throw std::invalid_argument("dimension mismatch");
    for (auto& x : v) x = static_cast<std::uint32_t>(x % m_);
    bool grew = false;
    std::deque<ZnVector> queue{std::move(v)};
    while (!queue.empty()) {
        ZnVector w = std::move(queue.front());
        queue.pop_front();
        for (std::size_t col = 0; col < dim_; ++col) {
            if (w[col] == 0) continue;
            auto& slot = pivots_[col];
            if (!slot) {
                make_monic(w, col);
                std::uint32_t g = w[col];
                ZnVector ann(dim_, 0);
                kernels::axpy_mod(ann.data(), w.data(), static_cast<std::uint32_t>((m_ / g) % m_), dim_,
                                  static_cast<std::uint32_t>(m_));
                slot = std::move(w);
                grew = true;
                if (!is_zero(ann)) queue.push_back(std::move(ann));
                break;
            }
            ZnVector& row = *slot;
            if (w[col] % row[col] == 0) {
                reduce_step(w, col, row);
                continue;
            }
            // Replace the pivot by a gcd combination; old pivot and w re-enter the queue.
            std::int64_t s, t;
            std::int64_t g = ext_gcd(row[col], w[col], s, t);
            ZnVector comb(dim_, 0);
            const std::uint32_t mm = static_cast<std::uint32_t>(m_);
            kernels::axpy_mod(comb.data(), row.data(), reduce_mod(s, m_), dim_, mm);
            kernels::axpy_mod(comb.data(), w.data(), reduce_mod(t, m_), dim_, mm);
            (void)g;
            make_monic(comb, col);
            ZnVector old = std::move(row);
            ZnVector ann(dim_, 0);
            kernels::axpy_mod(ann.data(), comb.data(), static_cast<std::uint32_t>((m_ / comb[col]) % m_), dim_, mm);
            slot = std::move(comb);
            grew = true;
            reduce_step(old, col, *slot);
            reduce_step(w, col, *slot);
            if (!is_zero(old)) queue.push_back(std::move(old));
            if (!is_zero(w)) queue.push_back(std::move(w));
            if (!is_zero(ann)) queue.push_back(std::move(ann));
            break;
        }
    }
    return grew;
}

ZnVector ZnSubmodule::reduce(ZnVector v) const {
    if (v.size() != dim_) throw std::invalid_argument("dimension mismatch");
    for (auto& x : v) x = static_cast<std::uint32_t>(x % m_);
    for (std::size_t col = 0; col < dim_; ++col) {
        if (v[col] == 0) continue;
        const auto& slot = pivots_[col];
        if (!slot || v[col] % (*slot)[col] != 0) break;
        reduce_step(v, col, *slot);
    }
    return v;
}

bool ZnSubmodule::contains(ZnVector v) const { return is_zero(reduce(std::move(v))); }

std::vector<ZnVector> ZnSubmodule::basis() const {
    std::vector<ZnVector> out;
    for (const auto& p : pivots_)
        if (p) out.push_back(*p);
    return out;
}

std::vector<ZnVector> ZnSubmodule::suffix_rows(std::size_t prefix) const {
    std::vector<ZnVector> out;
    for (std::size_t col = prefix; col < dim_; ++col)
        if (pivots_[col]) out.emplace_back(pivots_[col]->begin() + static_cast<std::ptrdiff_t>(prefix), pivots_[col]->end());
    return out;
}

std::vector<std::uint64_t> ZnSubmodule::row_orders() const {
    std::vector<std::uint64_t> out;
    for (std::size_t col = 0; col < dim_; ++col)
        if (pivots_[col]) out.push_back(m_ / (*pivots_[col])[col]);
    return out;
}

bool ZnSubmodule::is_full() const {
    for (std::size_t col = 0; col < dim_; ++col)
        if (!pivots_[col] || (*pivots_[col])[col] != 1) return false;
    return true;
}

std::vector<ZnVector> zn_kernel(const std::vector<ZnVector>& images, std::uint64_t m) {
    const std::size_t k = images.size();
    const std::size_t width = k ? images.front().size() : 0;
    ZnSubmodule mod(m, width + k);
    for (std::size_t i = 0; i < k; ++i) {
        ZnVector row(width + k, 0);
        std::copy(images[i].begin(), images[i].end(), row.begin());
        row[width + i] = 1;
        mod.insert(std::move(row));
    }
    return mod.suffix_rows(width);
}

std::optional<ZnVector> zn_solve(const std::vector<ZnVector>& images, const ZnVector& target, std::uint64_t m) {
    // Kernel of [images; -target] with last coordinate 1 gives a solution.
    const std::size_t k = images.size();
    const std::size_t width = target.size();
    ZnSubmodule mod(m, width + k + 1);
    auto add_row = [&](const ZnVector& img, std::size_t tag) {
        ZnVector row(width + k + 1, 0);
        std::copy(img.begin(), img.end(), row.begin());
        row[width + tag] = 1;
        mod.insert(std::move(row));
    };
    ZnVector neg(width);
    for (std::size_t j = 0; j < width; ++j) neg[j] = static_cast<std::uint32_t>((m - target[j] % m) % m);
    // Target row first in column order so its tag is the leading suffix column.
    {
        ZnVector row(width + k + 1, 0);
        std::copy(neg.begin(), neg.end(), row.begin());
        row[width] = 1;
        mod.insert(std::move(row));
    }
    for (std::size_t i = 0; i < k; ++i) add_row(images[i], i + 1);
    // Elements vanishing on the image block; need one whose target tag is 1.
    ZnSubmodule kern(m, k + 1);
    for (auto& r : mod.suffix_rows(width)) kern.insert(r);
    auto rows = kern.basis();
    if (rows.empty() || rows.front()[0] != 1) return std::nullopt;
    // The first pivot column is 0 with leading 1: that row is a solution.
    ZnVector x(rows.front().begin() + 1, rows.front().end());
    return x;
}

}  // namespace chev
