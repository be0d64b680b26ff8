#include <memory>

#include "chev/groupcore.hpp"
#include "chev/ring_spec.hpp"
#include "doctest.h"

using namespace chev;

namespace {

std::shared_ptr<const Representation> rep(Family f, int l, const std::string& tag) {
    auto cb = std::make_shared<ChevalleyBasis>(std::make_shared<RootSystem>(f, l));
    return std::make_shared<Representation>(make_representation(cb, tag));
}

Mat diag(const Ring& r, std::vector<Elem> d) {
    Mat m(r, d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

}  // namespace

TEST_CASE("root elements: x(0) = 1, A2 standard x(t) = 1 + tE12, adjoint has three terms") {
    Ring z5 = make_zmod(5);
    ChevalleyGroup g(rep(Family::A, 2, "sc"), z5);
    for (std::size_t r = 0; r < 6; ++r) CHECK(g.x(r, 0).is_identity());
    for (Elem t = 0; t < 5; ++t) {
        Mat expect = Mat::identity(z5, 3);
        expect(0, 1) = t;
        CHECK(g.x(0, t) == expect);
    }
    ChevalleyGroup ad(rep(Family::A, 2, "adjoint"), z5);
    for (std::size_t r = 0; r < 6; ++r) CHECK(ad.rep().divided[r].size() == 3);
}

TEST_CASE("A2 standard: h(t) = diag(t, 1/t, 1), w(1) swaps v1, v2 up to sign") {
    Ring z5 = make_zmod(5);
    ChevalleyGroup g(rep(Family::A, 2, "sc"), z5);
    for (Elem t : z5.units()) CHECK(g.h(0, t) == diag(z5, {t, z5.inv(t), 1}));
    CHECK(g.h(0, 1).is_identity());
    Mat w = g.w(0, 1);
    CHECK(w(0, 0) == 0);
    CHECK(w(1, 1) == 0);
    CHECK(w(2, 2) == 1);
    CHECK(z5.is_unit(w(0, 1)));
    CHECK(z5.mul(w(0, 1), w(1, 0)) == z5.neg(1));
    CHECK_THROWS_AS(g.w(0, 0), RingError);
}

TEST_CASE("torus: h(chi_{a,u}) = h_a(u) for all roots and units") {
    for (auto [f, l, tag] : {std::tuple{Family::A, 2, "sc"}, {Family::C, 2, "universal"}, {Family::B, 2, "adjoint"},
                             {Family::A, 3, "w2"}}) {
        Ring z5 = make_zmod(5);
        ChevalleyGroup g(rep(f, l, tag), z5);
        CAPTURE(g.describe());
        for (std::size_t a = 0; a < g.roots().size(); ++a)
            for (Elem u : z5.units()) CHECK(g.torus(g.chi_root(a, u)) == g.h(a, u));
        TorusCharacter one{std::vector<Elem>(g.character_rank(), 1)};
        CHECK(g.torus(one).is_identity());
    }
}

TEST_CASE("character_of recovers characters from diagonal matrices") {
    Ring z7 = make_zmod(7);
    ChevalleyGroup g(rep(Family::A, 2, "sc"), z7);
    auto chars = g.all_characters(1000);
    REQUIRE(chars);
    CHECK(chars->size() == 36);
    for (const auto& chi : *chars) {
        auto back = g.character_of(g.torus(chi), 1000);
        REQUIRE(back);
        CHECK(*back == chi);
    }
    CHECK_FALSE(g.character_of(diag(z7, {2, 1, 1}), 1000));
}

TEST_CASE("relations hold exhaustively on small cases") {
    SamplingPolicy p;
    p.exhaustive = true;
    for (auto [f, l, tag, n] : {std::tuple{Family::A, 2, "adjoint", 3}, {Family::A, 2, "sc", 6}, {Family::G, 2, "adjoint", 2},
                                {Family::B, 2, "adjoint", 3}, {Family::A, 3, "w2", 4}}) {
        ChevalleyGroup g(rep(f, l, tag), make_zmod(n));
        for (const auto& id : all_relation_ids()) {
            auto r = verify_relation(g, id, p);
            CAPTURE(g.describe());
            CAPTURE(id);
            CHECK(r.exhaustive);
            CHECK(r.cases > 0);
            CHECK(r.failure_count == 0);
            CHECK(r.failures.empty());
        }
    }
}

TEST_CASE("sampled relation runs are deterministic in the seed") {
    ChevalleyGroup g(rep(Family::B, 2, "adjoint"), make_zmod(7));
    SamplingPolicy p;
    p.budget = 10;
    p.samples = 50;
    auto a = verify_relation(g, "R6", p);
    auto b = verify_relation(g, "R6", p);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.cases == 50);
    CHECK(a.passed());
    CHECK(a.cases == b.cases);
}

TEST_CASE("commutator constants: B2 shapes, A2 unit constant") {
    auto b2 = rep(Family::B, 2, "adjoint");
    const RootSystem& rs = b2->roots();
    // a1 long, a2 short
    CHECK(rs.is_long(0));
    CHECK_FALSE(rs.is_long(1));
    auto f = commutator_constants(*b2, 0, 1);
    REQUIRE(f.terms.size() == 2);
    CHECK(f.terms[0].root == rs.find_by_coeffs({1, 1}).value());
    CHECK((f.terms[0].i == 1 && f.terms[0].j == 1));
    CHECK(std::llabs(f.terms[0].c) == 1);
    CHECK(f.terms[1].root == rs.find_by_coeffs({1, 2}).value());
    CHECK((f.terms[1].i == 1 && f.terms[1].j == 2));
    CHECK(std::llabs(f.terms[1].c) == 1);
    auto f2 = commutator_constants(*b2, rs.find_by_coeffs({1, 1}).value(), 1);
    REQUIRE(f2.terms.size() == 1);
    CHECK(std::llabs(f2.terms[0].c) == 2);
    CHECK(check_commutator_formula(*b2, f, {{1, 1}, {2, 3}, {-1, 2}, {5, -3}}));
    CHECK(check_commutator_formula(*b2, f2, {{1, 1}, {2, 3}, {-4, 7}}));

    auto a2 = rep(Family::A, 2, "adjoint");
    auto g = commutator_constants(*a2, 0, 1);
    REQUIRE(g.terms.size() == 1);
    CHECK(std::llabs(g.terms[0].c) == 1);
    CHECK(g.terms[0].c == a2->basis->N(0, 1));
}

TEST_CASE("commutator constants do not depend on the representation") {
    auto ad = rep(Family::A, 3, "adjoint");
    auto st = rep(Family::A, 3, "standard");
    auto w2 = rep(Family::A, 3, "w2");
    const RootSystem& rs = ad->roots();
    for (std::size_t a = 0; a < rs.size(); ++a)
        for (std::size_t b = 0; b < rs.size(); ++b) {
            if (rs.neg(a) == b) continue;
            auto fa = commutator_constants(*ad, a, b);
            auto fs = commutator_constants(*st, a, b);
            auto fw = commutator_constants(*w2, a, b);
            REQUIRE(fa.terms.size() == fs.terms.size());
            REQUIRE(fa.terms.size() == fw.terms.size());
            for (std::size_t k = 0; k < fa.terms.size(); ++k) {
                CHECK(fa.terms[k].c == fs.terms[k].c);
                CHECK(fa.terms[k].c == fw.terms[k].c);
            }
        }
}

TEST_CASE("G2 commutator constants exist for every pair and re-check at other points") {
    auto g2 = rep(Family::G, 2, "adjoint");
    const RootSystem& rs = g2->roots();
    for (std::size_t a = 0; a < rs.size(); ++a)
        for (std::size_t b = 0; b < rs.size(); ++b) {
            if (rs.neg(a) == b) continue;
            auto f = commutator_constants(*g2, a, b);
            for (const auto& t : f.terms) CHECK((std::llabs(t.c) >= 1 && std::llabs(t.c) <= 3));
            CHECK(check_commutator_formula(*g2, f, {{2, -1}, {-1, 3}}));
        }
}

TEST_CASE("generators have determinant one; U(A2, Z/2) has 8 elements; N/H is the Weyl group") {
    Ring z5 = make_zmod(5);
    ChevalleyGroup g(rep(Family::B, 2, "adjoint"), z5);
    for (const Mat& m : g.elementary_generators()) CHECK(m.det() == 1);
    for (const Mat& m : g.subgroup_generators('N')) CHECK(m.det() == 1);

    ChevalleyGroup a2(rep(Family::A, 2, "sc"), make_zmod(2));
    CHECK(GroupClosure(a2.subgroup_generators('U'), 1000).size() == 8);
    CHECK(GroupClosure(a2.subgroup_generators('V'), 1000).size() == 8);

    for (auto [f, l, tag] : {std::tuple{Family::A, 2, "sc"}, {Family::B, 2, "adjoint"}, {Family::G, 2, "adjoint"}}) {
        ChevalleyGroup gg(rep(f, l, tag), z5);
        GroupClosure H(gg.subgroup_generators('H'), 100000);
        GroupClosure N(gg.subgroup_generators('N'), 100000);
        REQUIRE(H.complete());
        REQUIRE(N.complete());
        CHECK(N.size() == H.size() * gg.roots().weyl_group_order());
        // H is normalized by N
        for (const Mat& w : gg.subgroup_generators('N'))
            for (const Mat& h : H.generators()) CHECK(H.contains(w * h * w.inv()));
    }
}

TEST_CASE("E_sc(A2, Z/5) = SL3(5) has trivial center; GF(4) center has order 3") {
    {
        Ring z5 = make_zmod(5);
        ChevalleyGroup g(rep(Family::A, 2, "sc"), z5);
        FullGroup G(g, 1000000);
        REQUIRE(G.elementary().complete());
        CHECK(G.elementary().size() == 372000);
        auto z = G.center_bruteforce();
        REQUIRE(z);
        CHECK(z->size() == 1);
        CHECK(G.center_from_torus().size() == 1);
        CHECK(G.contains(Mat::identity(z5, 3)) == Membership::Member);
        CHECK(G.contains(diag(z5, {2, 1, 1})) == Membership::NonMember);
    }
    {
        Ring f4 = make_galois_field(4);
        ChevalleyGroup g(rep(Family::A, 2, "sc"), f4);
        FullGroup G(g, 1000000);
        REQUIRE(G.elementary().complete());
        CHECK(G.elementary().size() == 60480);
        auto z = G.center_bruteforce();
        REQUIRE(z);
        CHECK(z->size() == 3);
        // scalar oracle: lambda I with lambda^3 = 1
        std::size_t cubes = 0;
        for (Elem l : f4.units())
            if (f4.pow(l, 3) == f4.one()) {
                ++cubes;
                CHECK(G.in_elementary(Mat::scalar(f4, 3, l)) == Membership::Member);
            }
        CHECK(cubes == 3);
        for (const Mat& m : *z) CHECK(m == Mat::scalar(f4, 3, m(0, 0)));
        CHECK(G.center_from_torus().size() == 3);
    }
}

TEST_CASE("adjoint A2 over GF(4): E = PSL3(4), torus meets E in 3 of 9 elements, G = T E") {
    Ring f4 = make_galois_field(4);
    ChevalleyGroup g(rep(Family::A, 2, "adjoint"), f4);
    FullGroup G(g, 1000000);
    REQUIRE(G.elementary().complete());
    CHECK(G.elementary().size() == 20160);
    auto chars = g.all_characters(100);
    REQUIRE(chars);
    CHECK(chars->size() == 9);
    std::size_t inside = 0;
    for (const auto& chi : *chars) {
        Mat t = g.torus(chi);
        if (G.in_elementary(t) == Membership::Member) ++inside;
        CHECK(G.contains(t) == Membership::Member);
    }
    CHECK(inside == 3);
}

TEST_CASE("truncated closures give undecided, never a wrong verdict") {
    Ring z5 = make_zmod(5);
    ChevalleyGroup g(rep(Family::A, 2, "sc"), z5);
    FullGroup G(g, 50);
    CHECK_FALSE(G.elementary().complete());
    Mat far = g.x(0, 1) * g.x(3, 2) * g.x(1, 3) * g.x(4, 4) * g.x(2, 1) * g.x(5, 3);
    CHECK(G.in_elementary(far) != Membership::NonMember);
    CHECK_FALSE(G.center_bruteforce().has_value());
}
