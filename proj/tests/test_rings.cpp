#include <algorithm>
#include <random>
#include <set>

#include "chev/fractions.hpp"
#include "chev/ideals.hpp"
#include "chev/ring.hpp"
#include "chev/ring_spec.hpp"
#include "doctest.h"

using namespace chev;

namespace {

// Every ideal generated by at most two elements; for the small rings used
// here this reaches every ideal, so maximal ones can be filtered directly.
std::vector<std::vector<Elem>> ideals_by_two_generators(const Ring& r) {
    std::set<std::vector<Elem>> all;
    for (Elem a = 0; a < r.size(); ++a)
        for (Elem b = a; b < r.size(); ++b) {
            std::set<Elem> s;
            for (Elem x = 0; x < r.size(); ++x)
                for (Elem y = 0; y < r.size(); ++y) s.insert(r.add(r.mul(x, a), r.mul(y, b)));
            all.insert(std::vector<Elem>(s.begin(), s.end()));
        }
    return {all.begin(), all.end()};
}

std::vector<std::vector<Elem>> maximal_by_enumeration(const Ring& r) {
    auto all = ideals_by_two_generators(r);
    std::vector<std::vector<Elem>> out;
    for (const auto& i : all) {
        if (i.size() == r.size()) continue;
        bool maximal = true;
        for (const auto& j : all)
            if (j.size() > i.size() && j.size() < r.size() && std::includes(j.begin(), j.end(), i.begin(), i.end()))
                maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

}  // namespace

TEST_CASE("ring axioms hold exhaustively for the test corpus") {
    std::vector<Ring> corpus = {make_zmod(6),
                                make_zmod(12),
                                make_product({make_zmod(4), make_zmod(3)}),
                                make_galois_field(4),
                                make_galois_field(9),
                                make_root_extension(make_zmod(5), 2, 2),
                                make_root_extension(make_zmod(5), 4, 2),
                                parse_ring("loc(Z/12, 2)"),
                                parse_ring("Z/2 x GF(4)")};
    for (const auto& r : corpus) {
        CAPTURE(r.spec());
        CHECK_FALSE(check_ring_axioms(r).has_value());
        CHECK(r.one() != r.zero());
    }
}

TEST_CASE("zero ring is rejected") {
    CHECK_THROWS_AS(make_zmod(1), RingError);
    CHECK_THROWS_AS(parse_ring("Z/1"), RingSpecError);
}

TEST_CASE("product ring: invertible iff every component is") {
    Ring r = make_product({make_zmod(4), make_zmod(3), make_zmod(5)});
    CHECK(r.size() == 60);
    for (Elem a = 0; a < r.size(); ++a) {
        auto parts = product_split(r, a);
        bool comp = make_zmod(4).is_unit(parts[0]) && make_zmod(3).is_unit(parts[1]) && make_zmod(5).is_unit(parts[2]);
        CHECK(r.is_unit(a) == comp);
        CHECK(product_join(r, parts) == a);
    }
}

TEST_CASE("additive coordinates round-trip") {
    for (const char* spec : {"Z/12", "Z/4 x Z/6", "GF(8)", "Z/4[y]/(y^2 - 3)", "loc(Z/12, 3)"}) {
        Ring r = parse_ring(spec);
        CAPTURE(spec);
        std::vector<std::uint64_t> c(r.additive_rank());
        for (Elem a = 0; a < r.size(); ++a) {
            r.exponent_coords(a, c.data());
            CHECK(r.from_exponent_coords(c.data()) == a);
        }
    }
}

TEST_CASE("fractions: equality is the witness relation") {
    Ring z6 = make_zmod(6);
    FractionRing<FiniteRingView> fr(FiniteRingView{z6}, finite_multiplicative_set(z6, {1, 2, 4}));
    auto w = fr.equivalence_witness(fr.embed(3), fr.embed(0));
    REQUIRE(w.has_value());
    CHECK(*w == 2);
    // Oracle: exhaust u in Y directly.
    for (Elem a = 0; a < 6; ++a)
        for (Elem s : {1u, 2u, 4u})
            for (Elem b = 0; b < 6; ++b)
                for (Elem t : {1u, 2u, 4u}) {
                    bool expect = false;
                    for (Elem u : {1u, 2u, 4u})
                        expect = expect || z6.mul(z6.sub(z6.mul(a, t), z6.mul(b, s)), u) == 0;
                    CHECK(fr.equal({a, s}, {b, t}) == expect);
                }
}

TEST_CASE("fractions over the integers") {
    MultiplicativeSet<IntegerRing> trivial{[](std::int64_t s) { return s == 1; }, {1}, true};
    FractionRing<IntegerRing> z(IntegerRing{}, trivial);
    for (std::int64_t a = -5; a <= 5; ++a)
        for (std::int64_t b = -5; b <= 5; ++b) CHECK(z.equal(z.embed(a), z.embed(b)) == (a == b));

    MultiplicativeSet<IntegerRing> twos{[](std::int64_t s) { return s > 0 && (s & (s - 1)) == 0; },
                                        {1, 2, 4, 8, 16},
                                        false};
    FractionRing<IntegerRing> dyadic(IntegerRing{}, twos);
    CHECK(dyadic.equal(dyadic.make(2, 1), dyadic.make(4, 2)));
    CHECK_FALSE(dyadic.equal(dyadic.make(1, 2), dyadic.make(1, 4)));
    CHECK_THROWS_AS(dyadic.make(1, 3), RingError);
}

TEST_CASE("fraction equality is an equivalence relation on sampled triples") {
    Ring z12 = make_zmod(12);
    FractionRing<FiniteRingView> fr(FiniteRingView{z12}, finite_multiplicative_set(z12, {1, 3, 9}));
    std::mt19937 rng(7);
    std::uniform_int_distribution<Elem> num(0, 11), den(0, 2);
    const Elem dens[] = {1, 3, 9};
    for (int i = 0; i < 2000; ++i) {
        Fraction<FiniteRingView> x{num(rng), dens[den(rng)]}, y{num(rng), dens[den(rng)]}, w{num(rng), dens[den(rng)]};
        CHECK(fr.equal(x, x));
        CHECK(fr.equal(x, y) == fr.equal(y, x));
        if (fr.equal(x, y) && fr.equal(y, w)) CHECK(fr.equal(x, w));
    }
}

TEST_CASE("non-closed denominator set is rejected") {
    Ring z6 = make_zmod(6);
    CHECK_THROWS_AS(FractionRing<FiniteRingView>(FiniteRingView{z6}, finite_multiplicative_set(z6, {1, 2})),
                    RingError);
    CHECK_THROWS_AS(FractionRing<FiniteRingView>(FiniteRingView{z6}, finite_multiplicative_set(z6, {2, 4})),
                    RingError);
}

TEST_CASE("maximal ideals agree with ideal enumeration") {
    for (const char* spec : {"Z/12", "Z/5", "Z/4", "Z/30", "Z/2 x Z/4", "GF(4)", "Z/5[y]/(y^2 - 4)"}) {
        Ring r = parse_ring(spec);
        CAPTURE(spec);
        auto got = maximal_ideals(r);
        auto want = maximal_by_enumeration(r);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].elements == want[i]);
            CHECK(is_maximal_ideal(r, got[i]));
        }
    }
    auto m12 = maximal_ideals(make_zmod(12));
    REQUIRE(m12.size() == 2);
    CHECK(m12[0].size() == 6);
    CHECK(m12[1].size() == 4);
    auto m5 = maximal_ideals(make_zmod(5));
    REQUIRE(m5.size() == 1);
    CHECK(m5[0].elements == std::vector<Elem>{0});
    auto m4 = maximal_ideals(make_zmod(4));
    REQUIRE(m4.size() == 1);
    CHECK(m4[0].elements == std::vector<Elem>{0, 2});
}

TEST_CASE("enumeration budget is enforced") {
    CHECK_THROWS_AS(maximal_ideals(make_zmod(20000)), UnsupportedError);
}

TEST_CASE("localization agrees with the CRT quotient oracle") {
    Ring z12 = make_zmod(12);
    // Oracle: R_m = R / {a : s a = 0 for some s outside m}; for Z/12 that is Z/4 at (2), Z/3 at (3).
    struct Case {
        Elem gen;
        std::uint64_t q;
    };
    for (Case c : {Case{2, 4}, Case{3, 3}}) {
        Ideal m = ideal_generated(z12, {c.gen});
        LocalRing loc = localize_at(z12, m);
        CHECK(loc.ring.size() == c.q);
        CHECK(loc.canonical.preserves_structure());
        CHECK(is_local_ring(loc.ring));
        for (Elem a = 0; a < 12; ++a)
            for (Elem b = 0; b < 12; ++b) CHECK((loc.canonical(a) == loc.canonical(b)) == (a % c.q == b % c.q));
    }
    LocalRing field = localize_at(make_zmod(5), ideal_generated(make_zmod(5), {0}));
    CHECK(field.ring.size() == 5);
    CHECK(field.ring.spec() == "Z/5");
    CHECK_THROWS_AS(localize_at(z12, ideal_generated(z12, {4})), RingError);
}

TEST_CASE("localizations of small rings are local") {
    for (const char* spec : {"Z/30", "Z/2 x Z/4", "Z/5[y]/(y^2 - 4)", "Z/36"}) {
        Ring r = parse_ring(spec);
        for (const auto& m : maximal_ideals(r)) {
            LocalRing loc = localize_at(r, m);
            CAPTURE(spec);
            if (loc.ring.size() <= 64) {
                CHECK(is_local_ring(loc.ring));
                CHECK_FALSE(check_ring_axioms(loc.ring).has_value());
            }
        }
    }
}

TEST_CASE("diagonal embedding is an injective homomorphism") {
    for (std::uint64_t n : {6u, 12u, 30u, 36u, 5u}) {
        Ring r = make_zmod(n);
        auto d = diagonal_embedding(r);
        CAPTURE(n);
        CHECK(d.map.preserves_structure());
        std::size_t kernel = 0;
        for (Elem a = 0; a < r.size(); ++a) kernel += d.map(a) == 0;
        CHECK(kernel == 1);
    }
    auto d12 = diagonal_embedding(make_zmod(12));
    auto parts = product_split(d12.product, d12.map(7));
    CHECK(d12.locals[0].ring.format(parts[0]) == "3");
    CHECK(d12.locals[1].ring.format(parts[1]) == "1");
    auto d5 = diagonal_embedding(make_zmod(5));
    CHECK(d5.product.spec() == "Z/5");
    for (Elem a = 0; a < 5; ++a) CHECK(d5.map(a) == a);
}

TEST_CASE("quotient extensions") {
    Ring s = make_root_extension(make_zmod(5), 2, 2);
    CHECK(s.size() == 25);
    Elem y = poly_from_coeffs(s, {0, 1});
    CHECK(s.mul(y, y) == base_embedding(s)(2));
    for (Elem a = 1; a < 25; ++a) CHECK(s.is_unit(a));

    Ring t = make_root_extension(make_zmod(5), 4, 2);
    Elem ty = poly_from_coeffs(t, {0, 1});
    auto emb = base_embedding(t);
    CHECK(t.mul(t.sub(ty, emb(2)), t.add(ty, emb(2))) == 0);
    CHECK_FALSE(t.is_unit(t.sub(ty, emb(2))));

    Ring same = make_root_extension(make_zmod(7), 1, 1);
    CHECK(same.size() == 7);
    CHECK(base_embedding(same).bijective());
    CHECK(base_embedding(same).preserves_structure());

    CHECK_THROWS_AS(make_root_extension(make_zmod(6), 2, 2), RingError);
}

TEST_CASE("idempotent systems") {
    Ring z6 = make_zmod(6);
    auto sys = find_idempotent_systems(z6, 2);
    CHECK(std::find(sys.begin(), sys.end(), IdempotentSystem{3, 4}) != sys.end());
    // Oracle: exhaustive pairs.
    std::vector<IdempotentSystem> want;
    for (Elem a = 0; a < 6; ++a)
        for (Elem b = 0; b < 6; ++b)
            if (z6.mul(a, a) == a && z6.mul(b, b) == b && z6.mul(a, b) == 0 && z6.add(a, b) == 1) want.push_back({a, b});
    CHECK(sys == want);
    for (const auto& e : sys) CHECK(is_idempotent_system(z6, e));

    auto one = find_idempotent_systems(make_galois_field(4), 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == IdempotentSystem{1});
    auto f5 = find_idempotent_systems(make_zmod(5), 2);
    CHECK(f5 == std::vector<IdempotentSystem>{{0, 1}, {1, 0}});
}

TEST_CASE("ring automorphisms") {
    auto gf4 = ring_automorphisms(make_galois_field(4));
    REQUIRE(gf4.size() == 2);
    Ring f4 = make_galois_field(4);
    for (Elem a = 0; a < 4; ++a) {
        CHECK(gf4[0](a) == a);
        CHECK(gf4[1](a) == f4.mul(a, a));
    }
    CHECK(ring_automorphisms(make_zmod(5)).size() == 1);
    CHECK(ring_automorphisms(make_galois_field(9)).size() == 2);
    CHECK(ring_automorphisms(make_galois_field(8)).size() == 3);
    CHECK(ring_automorphisms(parse_ring("Z/5[y]/(y^2-2)")).size() == 2);
    CHECK(ring_automorphisms(parse_ring("GF(4) x GF(4)")).size() == 8);
    for (const auto& h : ring_automorphisms(parse_ring("Z/2 x GF(4)"))) {
        CHECK(h.preserves_structure());
        CHECK(h.bijective());
    }
}

TEST_CASE("ring specification parser") {
    CHECK(parse_ring("Z/6").size() == 6);
    CHECK(parse_ring(" z / 6 ").spec() == "Z/6");
    CHECK(parse_ring("Z/4 x Z/3").size() == 12);
    CHECK(parse_ring("Z/4 X Z/3 x Z/5").size() == 60);
    CHECK(parse_ring("Z/5[y]/(y^2 - 2)").size() == 25);
    CHECK(parse_ring("Z/5[Y]/(Y^2 + 3)").spec() == "Z/5[y]/(y^2 - 2)");
    CHECK(parse_ring("GF(4)").size() == 4);
    CHECK(parse_ring("loc(Z/12, 2)").size() == 4);
    CHECK(parse_ring("(Z/2 x Z/3)").size() == 6);
    CHECK(parse_ring("Z/7[z]/(z^3 - 2)").size() == 343);

    for (const char* spec : {"Z/6", "Z/4 x Z/3", "Z/5[y]/(y^2 - 2)", "Z/7[y]/(y^3 + y + 1)"}) {
        Ring r = parse_ring(spec);
        CHECK(parse_ring(r.spec()).spec() == r.spec());
    }

    auto error_position = [](const std::string& s) -> std::size_t {
        try {
            parse_ring(s);
        } catch (const RingSpecError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    CHECK(error_position("Z/") == 2);
    CHECK(error_position("Q") == 0);
    CHECK(error_position("Z/5 y") == 4);
    CHECK(error_position("Z/5[y]/(2y^2 - 1)") != std::string::npos);
    CHECK(error_position("loc(Z/12, 5)") != std::string::npos);
    CHECK(error_position("GF(6)") != std::string::npos);
    CHECK(error_position("Z/6[y]/(y^2 - 2") != std::string::npos);
}
