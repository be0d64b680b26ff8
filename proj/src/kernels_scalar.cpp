#include <algorithm>
#include <atomic>
#include <vector>

#include "chev/kernels.hpp"

namespace chev::kernels {

namespace scalar {

void matmul_mod(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c, std::size_t n, std::uint32_t m) {
    std::vector<std::uint64_t> acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < n; ++k) {
            std::uint64_t x = a[i * n + k];
            if (x == 0) continue;
            const std::uint32_t* row = b + k * n;
            for (std::size_t j = 0; j < n; ++j) acc[j] += x * row[j];
        }
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] = static_cast<std::uint32_t>(acc[j] % m);
    }
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t len, std::uint32_t m) {
    for (std::size_t i = 0; i < len; ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t(f) * src[i]) % m);
}

}  // namespace scalar

namespace {
std::atomic<bool> force_scalar{false};

bool use_avx2() {
    static const bool ok = avx2::available();
    return ok && !force_scalar.load(std::memory_order_relaxed);
}
}  // namespace

void set_force_scalar(bool on) { force_scalar.store(on); }

void matmul_mod(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c, std::size_t n, std::uint32_t m) {
    if (use_avx2() && n >= 4)
        avx2::matmul_mod(a, b, c, n, m);
    else
        scalar::matmul_mod(a, b, c, n, m);
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t len, std::uint32_t m) {
    if (use_avx2() && m < kAxpyVectorModulusLimit && len >= 8)
        avx2::axpy_mod(dst, src, f, len, m);
    else
        scalar::axpy_mod(dst, src, f, len, m);
}

}  // namespace chev::kernels
