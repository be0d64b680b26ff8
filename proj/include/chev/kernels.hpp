#pragma once

// Modular arithmetic kernels on dense row-major arrays of 32-bit residues.
// Each kernel has a portable scalar reference and an AVX2 variant; the
// dispatching entry points pick the AVX2 path when the CPU supports it and
// the modulus is in the variant's range. Results are bit-identical.

#include <cstddef>
#include <cstdint>

namespace chev::kernels {

/// Largest modulus accepted by matmul_mod (products fit in 32 bits).
inline constexpr std::uint32_t kMatmulModulusLimit = 1u << 16;
/// Largest modulus taking the vector path in axpy_mod.
inline constexpr std::uint32_t kAxpyVectorModulusLimit = 1u << 15;

// C (n x n) = A * B mod m, all entries already reduced, m < kMatmulModulusLimit.
void matmul_mod(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c, std::size_t n, std::uint32_t m);
// dst[i] = (dst[i] + f * src[i]) mod m for i < len, m < 2^31, f < m.
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t len, std::uint32_t m);

namespace scalar {
void matmul_mod(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c, std::size_t n, std::uint32_t m);
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t len, std::uint32_t m);
}  // namespace scalar

namespace avx2 {
bool available();
void matmul_mod(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c, std::size_t n, std::uint32_t m);
// Requires m < kAxpyVectorModulusLimit.
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t len, std::uint32_t m);
}  // namespace avx2

/// Forces the scalar path (for equivalence testing and benchmarking).
void set_force_scalar(bool on);

}  // namespace chev::kernels
