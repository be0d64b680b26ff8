#include "chev/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace chev::kernels::avx2 {

bool available() { return __builtin_cpu_supports("avx2"); }

void matmul_mod(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c, std::size_t n, std::uint32_t m) {
    // Products are < 2^32; accumulate four 64-bit lanes per step and reduce once.
    const std::size_t vec_end = n & ~std::size_t{3};
    alignas(32) std::uint64_t lanes[4];
    std::uint64_t* acc = static_cast<std::uint64_t*>(_mm_malloc(sizeof(std::uint64_t) * (n + 4), 32));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) acc[j] = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint32_t x = a[i * n + k];
            if (x == 0) continue;
            const __m256i xv = _mm256_set1_epi64x(x);
            const std::uint32_t* row = b + k * n;
            std::size_t j = 0;
            for (; j < vec_end; j += 4) {
                __m256i bv = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(row + j)));
                __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + j));
                cur = _mm256_add_epi64(cur, _mm256_mul_epu32(bv, xv));
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + j), cur);
            }
            for (; j < n; ++j) acc[j] += std::uint64_t(x) * row[j];
        }
        std::size_t j = 0;
        for (; j < vec_end; j += 4) {
            _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + j)));
            for (int l = 0; l < 4; ++l) c[i * n + j + l] = static_cast<std::uint32_t>(lanes[l] % m);
        }
        for (; j < n; ++j) c[i * n + j] = static_cast<std::uint32_t>(acc[j] % m);
    }
    _mm_free(acc);
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t len, std::uint32_t m) {
    // x = dst + f*src < m(m+1) < 2^30, so the float quotient is off by at most one.
    const __m256i fv = _mm256_set1_epi32(static_cast<int>(f));
    const __m256i mv = _mm256_set1_epi32(static_cast<int>(m));
    const __m256i zero = _mm256_setzero_si256();
    const __m256 inv = _mm256_set1_ps(1.0f / static_cast<float>(m));
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, fv));
        __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(x), inv));
        __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, mv));
        r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), mv));
        __m256i over = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(mv, _mm256_set1_epi32(1)));
        r = _mm256_sub_epi32(r, _mm256_and_si256(over, mv));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    }
    for (; i < len; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t(f) * src[i]) % m);
}

}  // namespace chev::kernels::avx2

#else

namespace chev::kernels::avx2 {
bool available() { return false; }
void matmul_mod(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c, std::size_t n, std::uint32_t m) {
    scalar::matmul_mod(a, b, c, n, m);
}
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t len, std::uint32_t m) {
    scalar::axpy_mod(dst, src, f, len, m);
}
}  // namespace chev::kernels::avx2

#endif
