#include <memory>

#include "chev/chevbasis.hpp"
#include "doctest.h"

using namespace chev;

namespace {

std::shared_ptr<const RootSystem> sys(Family f, int l) { return std::make_shared<RootSystem>(f, l); }

// p from coordinates directly.
std::int64_t string_p_oracle(const RootSystem& rs, std::size_t a, std::size_t b) {
    std::int64_t p = 0;
    IVec v = rs.coords(b);
    while (true) {
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= rs.coords(a)[k];
        if (!rs.find(v)) return p;
        ++p;
    }
}

}  // namespace

TEST_CASE("structure constants: |N| = p + 1 and integrality, Jacobi for all families") {
    for (auto [f, l] : {std::pair{Family::A, 2}, {Family::A, 4}, {Family::B, 2}, {Family::B, 3}, {Family::C, 3},
                        {Family::D, 4}, {Family::G, 2}, {Family::F, 4}, {Family::E, 6}}) {
        ChevalleyBasis cb(sys(f, l));
        const RootSystem& rs = cb.roots();
        CAPTURE(rs.name());
        CHECK_FALSE(cb.check_jacobi().has_value());
        for (std::size_t a = 0; a < rs.size(); ++a)
            for (std::size_t b = 0; b < rs.size(); ++b) {
                auto s = rs.sum(a, b);
                if (!s) {
                    CHECK(cb.N(a, b) == 0);
                    continue;
                }
                std::int64_t n = cb.N(a, b);
                CHECK((n >= -3 && n <= 3 && n != 0));
                CHECK((n == string_p_oracle(rs, a, b) + 1 || n == -(string_p_oracle(rs, a, b) + 1)));
            }
        // Extraspecial pairs are positive.
        for (std::size_t r = 0; r < rs.num_positive(); ++r) {
            if (rs.height(r) == 1) continue;
            auto [g, d] = cb.extraspecial_pair(r);
            CHECK(cb.N(g, d) > 0);
        }
    }
}

TEST_CASE("A2 and B2 constants") {
    ChevalleyBasis a2(sys(Family::A, 2));
    CHECK(a2.N(0, 1) == 1);
    CHECK(a2.N(1, 0) == -1);
    ChevalleyBasis b2(sys(Family::B, 2));
    // beta short = a2, alpha + beta = index 2.
    CHECK((b2.N(1, 2) == 2 || b2.N(1, 2) == -2));
    CHECK(b2.N(0, 1) == 1);
}

TEST_CASE("adjoint representation reproduces the bracket table") {
    for (auto [f, l] : {std::pair{Family::A, 2}, {Family::B, 2}, {Family::G, 2}, {Family::C, 3}}) {
        ChevalleyBasis cb(sys(f, l));
        CAPTURE(cb.roots().name());
        const std::size_t d = cb.dim();
        CHECK(d == static_cast<std::size_t>(l) + cb.roots().size());
        std::vector<IntMat> ads;
        for (std::size_t u = 0; u < d; ++u) ads.push_back(cb.ad(u));
        for (std::size_t u = 0; u < d; ++u)
            for (std::size_t v = 0; v < d; ++v) {
                IntMat want(d);
                for (auto [t, c] : cb.bracket(u, v)) want = want + ads[t] * c;
                CHECK(commutator(ads[u], ads[v]) == want);
            }
        for (std::size_t r = 0; r < cb.roots().size(); ++r) {
            IntMat x = ads[cb.x_index(r)];
            for (std::size_t k = 0; k < d; ++k) CHECK(x(k, cb.x_index(r)) == 0);
            IntMat p = x;
            for (int k = 0; k < 4; ++k) p = p * x;
            CHECK(p.is_zero());
        }
    }
    CHECK(ChevalleyBasis(sys(Family::A, 2)).dim() == 8);
    CHECK(ChevalleyBasis(sys(Family::B, 2)).dim() == 10);
}

TEST_CASE("Killing form") {
    ChevalleyBasis a2(sys(Family::A, 2));
    IntMat k = a2.killing_form();
    CHECK(k == k.transpose());
    const RootSystem& rs = a2.roots();
    for (std::size_t a = 0; a < rs.size(); ++a)
        for (std::size_t b = 0; b < rs.size(); ++b)
            if (b != rs.neg(a)) CHECK(k(a2.x_index(a), a2.x_index(b)) == 0);
    CHECK(k(a2.x_index(0), a2.x_index(1)) == 0);
    // kappa(h1, h1) = sum over roots of <a, a1>^2.
    std::int64_t want = 0;
    for (std::size_t r = 0; r < rs.size(); ++r) want += rs.pairing(r, 0) * rs.pairing(r, 0);
    CHECK(k(0, 0) == want);
    CHECK(k(0, 0) == 12);
    // Nondegenerate on the Cartan part.
    CHECK(k(0, 0) * k(1, 1) - k(0, 1) * k(1, 0) != 0);
}

TEST_CASE("graph signs for every diagram symmetry") {
    for (auto [f, l] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::D, 4}, {Family::E, 6}}) {
        ChevalleyBasis cb(sys(f, l));
        for (const auto& perm : cb.roots().diagram_automorphisms()) {
            auto rp = cb.roots().extend_diagram_automorphism(perm);
            auto eps = cb.graph_signs(rp);
            for (int i = 0; i < l; ++i) CHECK(eps[cb.roots().simple(i)] == 1);
        }
    }
}
