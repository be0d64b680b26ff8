#include <random>

#include "chev/kernels.hpp"
#include "chev/matrix.hpp"
#include "doctest.h"

using namespace chev;

TEST_CASE("vector matmul kernel matches the scalar reference") {
    if (!kernels::avx2::available()) return;
    std::mt19937 rng(3);
    for (std::uint32_t m : {2u, 5u, 6u, 251u, 65521u}) {
        for (std::size_t n : {1u, 3u, 4u, 7u, 8u, 10u, 27u}) {
            std::uniform_int_distribution<std::uint32_t> d(0, m - 1);
            std::vector<std::uint32_t> a(n * n), b(n * n), c1(n * n), c2(n * n);
            for (auto& x : a) x = d(rng);
            for (auto& x : b) x = d(rng);
            kernels::scalar::matmul_mod(a.data(), b.data(), c1.data(), n, m);
            kernels::avx2::matmul_mod(a.data(), b.data(), c2.data(), n, m);
            CHECK(c1 == c2);
        }
    }
}

TEST_CASE("vector axpy kernel matches the scalar reference") {
    if (!kernels::avx2::available()) return;
    std::mt19937 rng(4);
    for (std::uint32_t m : {2u, 3u, 12u, 97u, 1000u, 32749u}) {
        std::uniform_int_distribution<std::uint32_t> d(0, m - 1);
        for (std::size_t len : {1u, 7u, 8u, 9u, 64u, 301u}) {
            for (int rep = 0; rep < 20; ++rep) {
                std::vector<std::uint32_t> dst(len), src(len);
                for (auto& x : dst) x = d(rng);
                for (auto& x : src) x = d(rng);
                std::uint32_t f = d(rng);
                auto d1 = dst, d2 = dst;
                kernels::scalar::axpy_mod(d1.data(), src.data(), f, len, m);
                kernels::avx2::axpy_mod(d2.data(), src.data(), f, len, m);
                CHECK(d1 == d2);
            }
        }
        // Extremes: all entries m-1.
        std::vector<std::uint32_t> dst(40, m - 1), src(40, m - 1);
        auto d1 = dst, d2 = dst;
        kernels::scalar::axpy_mod(d1.data(), src.data(), m - 1, 40, m);
        kernels::avx2::axpy_mod(d2.data(), src.data(), m - 1, 40, m);
        CHECK(d1 == d2);
    }
}

TEST_CASE("matrix product agrees with generic ring arithmetic") {
    Ring r = make_zmod(6);
    std::mt19937 rng(9);
    std::uniform_int_distribution<Elem> d(0, 5);
    Mat a(r, 5), b(r, 5);
    for (auto& x : a.data()) x = d(rng);
    for (auto& x : b.data()) x = d(rng);
    Mat c = a * b;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            Elem s = 0;
            for (std::size_t k = 0; k < 5; ++k) s = r.add(s, r.mul(a(i, k), b(k, j)));
            CHECK(c(i, j) == s);
        }
    kernels::set_force_scalar(true);
    CHECK(a * b == c);
    kernels::set_force_scalar(false);
}

TEST_CASE("division-free inverse and determinant") {
    std::mt19937 rng(10);
    for (const char* spec : {"Z/6", "Z/8", "GF(4)"}) {
        Ring r = make_zmod(2);
        if (std::string(spec) == "Z/6") r = make_zmod(6);
        if (std::string(spec) == "Z/8") r = make_zmod(8);
        if (std::string(spec) == "GF(4)") r = make_galois_field(4);
        std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(r.size() - 1));
        int inverted = 0;
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t n = 1 + trial % 4;
            Mat a(r, n);
            for (auto& x : a.data()) x = d(rng);
            // Determinant oracle: Leibniz expansion for n <= 4.
            std::vector<std::size_t> perm(n);
            for (std::size_t i = 0; i < n; ++i) perm[i] = i;
            Elem det = 0;
            do {
                int inv = 0;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
                Elem term = r.one();
                for (std::size_t i = 0; i < n; ++i) term = r.mul(term, a(i, perm[i]));
                det = inv % 2 ? r.sub(det, term) : r.add(det, term);
            } while (std::next_permutation(perm.begin(), perm.end()));
            CHECK(a.det() == det);
            auto ai = a.inverse();
            CHECK(ai.has_value() == r.is_unit(det));
            if (ai) {
                ++inverted;
                CHECK((a * *ai).is_identity());
                CHECK((*ai * a).is_identity());
            }
        }
        CHECK(inverted > 0);
    }
}
