#include <memory>

#include "chev/autos.hpp"
#include "chev/ring_spec.hpp"
#include "doctest.h"

using namespace chev;

namespace {

std::shared_ptr<const Representation> rep(Family f, int l, const std::string& tag) {
    auto cb = std::make_shared<ChevalleyBasis>(std::make_shared<RootSystem>(f, l));
    return std::make_shared<Representation>(make_representation(cb, tag));
}

Elem gf4_w(const Ring& f4) { return poly_from_coeffs(f4, {0, 1}); }

bool is_scalar(const Mat& m) {
    if (!m.is_diagonal()) return false;
    for (std::size_t i = 1; i < m.n(); ++i)
        if (m(i, i) != m(0, 0)) return false;
    return true;
}

}  // namespace

TEST_CASE("ring automorphisms act entrywise") {
    Ring f4 = make_galois_field(4);
    ChevalleyGroup g(rep(Family::A, 2, "sc"), f4);
    auto autos = ring_automorphisms(f4);
    REQUIRE(autos.size() == 2);
    const RingHom& frob = autos[1];
    Elem w = gf4_w(f4);
    CHECK(frob(w) == f4.mul(w, w));
    for (std::size_t r = 0; r < g.roots().size(); ++r)
        CHECK(apply_ring_auto(frob, g.x(r, w)) == g.x(r, f4.mul(w, w)));
    CHECK(apply_ring_auto(autos[0], g.x(0, w)) == g.x(0, w));

    Ring z5 = make_zmod(5);
    CHECK(ring_automorphisms(z5).size() == 1);
    ChevalleyGroup g5(rep(Family::A, 2, "sc"), z5);
    RingHom bad{z5, z5, {0, 2, 4, 1, 3}};  // doubling is additive only
    CHECK_THROWS_AS(apply_ring_auto(bad, g5.x(0, 1)), AutomorphismError);
}

TEST_CASE("graph automorphisms") {
    Ring z5 = make_zmod(5);
    ChevalleyGroup g(rep(Family::A, 2, "sc"), z5);
    GraphAction graph(g);
    REQUIRE(graph.symmetry_count() == 2);
    for (std::size_t r = 0; r < g.roots().size(); ++r)
        for (Elem t : z5.elements()) CHECK(graph.apply(graph.pure(0), r, t) == g.x(r, t));
    // the flip on simple roots, with sign 1 there
    CHECK(apply_graph_auto(graph, graph.pure(1), 0, 3) == g.x(1, 3));
    CHECK(apply_graph_auto(graph, graph.pure(1), 1, 2) == g.x(0, 2));
    CHECK_THROWS_AS(apply_graph_auto(graph, {1, 1}, 0, 1), AutomorphismError);
    CHECK(ChevalleyGroup(rep(Family::B, 2, "adjoint"), z5).roots().diagram_automorphisms().size() == 1);
    CHECK(GraphAction(ChevalleyGroup(rep(Family::D, 4, "adjoint"), make_zmod(3))).symmetry_count() == 6);
}

TEST_CASE("graph automorphisms preserve the commutator relations") {
    for (auto [f, l, tag, n] : {std::tuple{Family::A, 2, "sc", 5}, {Family::A, 3, "sc", 6}, {Family::A, 2, "adjoint", 6},
                                {Family::D, 4, "adjoint", 2}}) {
        Ring R = make_zmod(n);
        ChevalleyGroup g(rep(f, l, tag), R);
        GraphAction graph(g);
        const RootSystem& rs = g.roots();
        for (const auto& eps : graph.variants()) {
            CAPTURE(g.describe());
            CAPTURE(graph.describe(eps));
            for (std::size_t a = 0; a < rs.size(); ++a)
                for (std::size_t b = 0; b < rs.size(); ++b) {
                    if (a == b || rs.neg(a) == b || commutator_roots(rs, a, b).empty()) continue;
                    auto formula = commutator_constants(g.rep(), a, b);
                    Mat A = graph.apply(eps, a, 1), B = graph.apply(eps, b, 1);
                    Mat lhs = group_commutator(A, A.inv(), B, B.inv());
                    Mat rhs = Mat::identity(R, g.dim());
                    for (const auto& t : formula.terms) rhs = rhs * graph.apply(eps, t.root, R.from_int(t.c));
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("idempotent mixing over Z/6 splits by CRT components") {
    Ring z6 = make_zmod(6), z2 = make_zmod(2), z3 = make_zmod(3);
    auto r = rep(Family::A, 2, "sc");
    ChevalleyGroup g6(r, z6), g2(r, z2), g3(r, z3);
    GraphAction a6(g6), a2(g2), a3(g3);
    IdempotentSystem eps{3, 4};  // 3 = (1 mod 2, 0 mod 3): identity on Z/2, flip on Z/3
    for (std::size_t root = 0; root < g6.roots().size(); ++root)
        for (Elem t : z6.elements()) {
            Mat m = a6.apply(eps, root, t);
            Mat m2 = a2.apply(a2.pure(0), root, t % 2);
            Mat m3 = a3.apply(a3.pure(1), root, t % 3);
            for (std::size_t k = 0; k < m.data().size(); ++k) {
                CHECK(m.data()[k] % 2 == m2.data()[k]);
                CHECK(m.data()[k] % 3 == m3.data()[k]);
            }
        }
    CHECK(a6.variants().size() == 4);
}

TEST_CASE("inner and central factors") {
    Ring z7 = make_zmod(7);
    ChevalleyGroup g(rep(Family::B, 2, "adjoint"), z7);
    const RootSystem& rs = g.roots();
    // conjugation by h_a(t) acts as x_b(u) -> x_b(t^<b,a> u)
    for (std::size_t a = 0; a < rs.size(); ++a)
        for (std::size_t b = 0; b < rs.size(); ++b) {
            InnerFactor h{g.h(a, 3), identity_hom(z7)};
            Elem s = z7.mul(z7.pow(3, rs.pairing(b, a)), 2);
            CHECK(apply_inner(h, g.x(b, 2)) == g.x(b, s));
        }
    CHECK(apply_central(Mat::identity(z7, g.dim()), g.x(0, 1)) == g.x(0, 1));

    // conjugation by a matrix that does not normalize leaves the ring image
    Ring s = make_root_extension(z7, 3, 2);
    Mat y = Mat::identity(s, g.dim());
    y(0, 1) = poly_from_coeffs(s, {0, 1});
    CHECK_THROWS_AS(apply_inner(InnerFactor{y, base_embedding(s)}, g.x(2, 1)), AutomorphismError);
}

TEST_CASE("centers and central homomorphisms") {
    Ring f4 = make_galois_field(4);
    ChevalleyGroup g(rep(Family::A, 2, "sc"), f4);
    auto z = center_elements(g);
    CHECK(z.size() == 3);
    for (const Mat& m : z) {
        CHECK(is_scalar(m));
        CHECK(f4.pow(m(0, 0), 3) == f4.one());
    }
    // E = SL3(4) is perfect: its commutator subgroup is everything, so only tau = 1
    auto gens = g.elementary_generators();
    std::vector<Mat> comms;
    for (const Mat& a : gens)
        for (const Mat& b : gens) comms.push_back(group_commutator(a, a.inv(), b, b.inv()));
    GroupClosure whole(gens, 200000), derived(comms, 200000);
    REQUIRE(whole.complete());
    REQUIRE(derived.complete());
    CHECK(derived.size() == whole.size());
    auto homs = central_homomorphisms(g);
    REQUIRE(homs);
    REQUIRE(homs->size() == 1);
    CHECK(homs->front().empty());

    // a non-trivial assignment breaks the commutator relations
    CentralValues v(g.roots().size(), std::vector<Mat>(2, Mat::identity(f4, 3)));
    v[2][0] = z[1].is_identity() ? z[2] : z[1];
    CHECK_FALSE(central_values_consistent(g, v));
    CHECK(center_elements(ChevalleyGroup(rep(Family::A, 2, "sc"), make_zmod(5))).size() == 1);
}

TEST_CASE("root-lattice torus elements act by their character") {
    for (auto [f, l, tag, n] : {std::tuple{Family::A, 2, "sc", 7}, {Family::B, 2, "adjoint", 5}, {Family::C, 2, "universal", 5},
                                {Family::A, 3, "w2", 5}}) {
        Ring R = make_zmod(n);
        ChevalleyGroup g(rep(f, l, tag), R);
        const RootSystem& rs = g.roots();
        std::vector<Elem> vals{2, 3, 4};
        vals.resize(rs.rank());
        Mat d = root_lattice_torus(g, vals);
        for (std::size_t r = 0; r < rs.size(); ++r) {
            IVec k = rs.coeffs(r);
            Elem c = R.one();
            for (int i = 0; i < rs.rank(); ++i) c = R.mul(c, R.pow(vals[i], k[i]));
            CHECK(d * g.x(r, 1) * d.inv() == g.x(r, c));
        }
    }
}

TEST_CASE("conjugator solve") {
    Ring z5 = make_zmod(5);
    ChevalleyGroup g(rep(Family::A, 2, "sc"), z5);
    auto gens = g.elementary_generators();
    Mat h = g.x(0, 2) * g.w(1, 3) * g.x(5, 4) * g.h(2, 2);
    std::vector<std::pair<Mat, Mat>> pairs, ident;
    for (const Mat& x : gens) {
        pairs.emplace_back(x, h * x * h.inv());
        ident.emplace_back(x, x);
    }
    auto r = conjugator_solve(pairs);
    REQUIRE(r.status == ConjugatorStatus::Found);
    CHECK(is_scalar(r.y->inv() * h));
    auto i = conjugator_solve(ident);
    REQUIRE(i.status == ConjugatorStatus::Found);
    CHECK(is_scalar(*i.y));
    // x_a(1) is not conjugate to x_a(1)^2 by anything fixing the other generators
    pairs[0].second = gens[0] * gens[0];
    CHECK(conjugator_solve(pairs).status == ConjugatorStatus::NoSolution);
}

TEST_CASE("determinant normalization adjoins a root when needed") {
    Ring z5 = make_zmod(5);
    Mat y5 = Mat::identity(z5, 3);
    y5(0, 0) = 2;
    auto f5 = normalize_determinant(y5);
    CHECK(f5.into.dst.same_as(z5));  // every unit of Z/5 is a cube
    CHECK(f5.y.det() == 1);

    Ring f4 = make_galois_field(4);
    Mat y4 = Mat::identity(f4, 3);
    y4(0, 0) = gf4_w(f4);
    auto f = normalize_determinant(y4);
    CHECK(f.into.dst.size() == 64);
    CHECK(f.y.det() == f.into.dst.one());
    ChevalleyGroup g(rep(Family::A, 2, "sc"), f4);
    CHECK(normalization_check(f.y, g, f.into).passed);
    CHECK(apply_inner(f, g.x(0, 1)) == y4 * g.x(0, 1) * y4.inv());
}

TEST_CASE("decompose: identity, flip, transpose-inverse") {
    Ring z5 = make_zmod(5);
    ChevalleyGroup g(rep(Family::A, 2, "sc"), z5);
    GraphAction graph(g);
    auto id = decompose(g, identity_presentation(g));
    REQUIRE(id.status == DecompositionStatus::Standard);
    CHECK(id.verified);
    CHECK(id.factors->graph.empty());
    CHECK_FALSE(id.factors->ring);
    CHECK(id.factors->central.empty());
    CHECK(is_scalar(id.factors->inner->y));

    StandardAutomorphism flip;
    flip.graph = graph.pure(1);
    auto fr = decompose(g, present(g, graph, flip));
    REQUIRE(fr.status == DecompositionStatus::Standard);
    CHECK(fr.factors->graph == graph.pure(1));
    CHECK(is_scalar(fr.factors->inner->y));
    CHECK(fr.candidates.size() == 1);

    // x -> (x^T)^-1 is an automorphism of SL3 that is not inner
    AutomorphismPresentation ti;
    ti.images.resize(g.roots().size());
    for (std::size_t r = 0; r < g.roots().size(); ++r) ti.images[r].push_back(g.x(r, 1).transpose().inv());
    auto tr = decompose(g, ti);
    REQUIRE(tr.status == DecompositionStatus::Standard);
    CHECK(tr.factors->graph == graph.pure(1));
}

TEST_CASE("decompose: Frobenius after a torus conjugation over GF(4)") {
    Ring f4 = make_galois_field(4);
    ChevalleyGroup g(rep(Family::A, 2, "sc"), f4);
    GraphAction graph(g);
    StandardAutomorphism phi;
    phi.ring = ring_automorphisms(f4)[1];
    Mat h = g.h(0, gf4_w(f4));
    phi.inner = InnerFactor{h, identity_hom(f4)};
    auto p = present(g, graph, phi);

    auto gated = decompose(g, p);
    CHECK(gated.status == DecompositionStatus::OutOfScope);  // 1/2 is missing
    DecomposeOptions opt;
    opt.override_gate = true;
    auto d = decompose(g, p, opt);
    REQUIRE(d.status == DecompositionStatus::Standard);
    CHECK(d.verified);
    CHECK(d.factors->graph.empty());
    REQUIRE(d.factors->ring);
    CHECK(d.factors->ring->table == phi.ring->table);
    CHECK(d.factors->central.empty());
    const auto& in = *d.factors->inner;
    CHECK(is_scalar(in.y * h.map(in.into).inv()));
}

TEST_CASE("decompose round trip on random standard automorphisms") {
    for (auto [f, l, tag, spec] :
         {std::tuple{Family::A, 2, "sc", "Z/5"}, {Family::A, 2, "sc", "Z/6"}, {Family::C, 2, "universal", "Z/5"},
          {Family::B, 2, "adjoint", "Z/5"}, {Family::A, 3, "sc", "Z/4"}, {Family::A, 2, "sc", "GF(4)"}}) {
        Ring R = parse_ring(spec);
        ChevalleyGroup g(rep(f, l, tag), R);
        GraphAction graph(g);
        DecomposeOptions opt;
        opt.override_gate = true;
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            CAPTURE(g.describe());
            CAPTURE(seed);
            auto phi = random_standard_automorphism(g, graph, seed);
            CHECK_FALSE(check_standard(g, graph, phi).has_value());
            auto p = present(g, graph, phi);
            auto d = decompose(g, p, opt);
            CHECK(d.status == DecompositionStatus::Standard);
            CHECK(d.verified);
            REQUIRE(d.factors);
            CHECK(present(g, graph, *d.factors).images == p.images);
            // the input's own (graph, ring) pair is among the candidates
            std::size_t ri = 0;
            auto autos = ring_automorphisms(R);
            if (phi.ring)
                while (autos[ri].table != phi.ring->table) ++ri;
            IdempotentSystem eps = phi.graph.empty() ? graph.pure(0) : phi.graph;
            bool found = false;
            for (const auto& c : d.candidates) found = found || (c.graph == eps && c.ring_index == ri);
            CHECK(found);
        }
    }
}

TEST_CASE("decompose: gates, non-standard maps and central discrepancies") {
    ChevalleyGroup z2(rep(Family::A, 2, "sc"), make_zmod(2));
    auto gated = decompose(z2, identity_presentation(z2));
    CHECK(gated.status == DecompositionStatus::OutOfScope);
    CHECK(gated.violations == std::vector<std::string>{"1/2"});
    CHECK(decomposition_status_name(gated.status) == "out of theorem scope");
    CHECK(hypothesis_violations(RootSystem(Family::G, 2), make_zmod(5)).empty());
    CHECK(hypothesis_violations(RootSystem(Family::G, 2), make_zmod(3)) == std::vector<std::string>{"1/3"});
    CHECK(hypothesis_violations(RootSystem(Family::A, 3), make_zmod(2)).empty());

    Ring z5 = make_zmod(5);
    ChevalleyGroup g(rep(Family::A, 2, "sc"), z5);
    // every generator sent to the identity: not an automorphism
    AutomorphismPresentation triv;
    triv.images.assign(g.roots().size(), {Mat::identity(z5, 3)});
    CHECK(decompose(g, triv).status == DecompositionStatus::NonStandard);

    // a sign on one C2 generator over Z/5 already breaks x^5 = 1
    ChevalleyGroup c2(rep(Family::C, 2, "universal"), z5);
    auto p = identity_presentation(c2);
    p.images[3][0] = p.images[3][0].scaled(z5.neg(1));
    CHECK_THROWS_AS(decompose(c2, p), AutomorphismError);
    // over Z/9 the scalar 4 has 4^9 = 1, passes the screen, and is caught as a non-homomorphism
    Ring z9 = make_zmod(9);
    ChevalleyGroup a9(rep(Family::A, 2, "sc"), z9);
    auto q = identity_presentation(a9);
    q.images[2][0] = q.images[2][0].scaled(4);
    CHECK_FALSE(screen_presentation(a9, q).has_value());
    auto d = decompose(a9, q);
    CHECK(d.status == DecompositionStatus::NonStandard);
    CHECK(d.transcript.back().find("homomorphism") != std::string::npos);

    // malformed presentations are rejected
    AutomorphismPresentation short_p;
    CHECK_THROWS_AS(decompose(g, short_p), AutomorphismError);
}

TEST_CASE("presentation JSON round trip and errors") {
    Ring f4 = make_galois_field(4);
    ChevalleyGroup g(rep(Family::A, 2, "sc"), f4);
    GraphAction graph(g);
    auto phi = random_standard_automorphism(g, graph, 3);
    auto p = present(g, graph, phi);
    auto j = presentation_to_json(g, p);
    CHECK(j.size() == g.roots().size() * 2);
    CHECK(presentation_from_json(g, j).images == p.images);
    CHECK(j.dump() == presentation_to_json(g, presentation_from_json(g, j)).dump());

    auto missing = j;
    missing.erase(missing.begin());
    CHECK_THROWS_AS(presentation_from_json(g, missing), AutomorphismError);
    auto bad_root = j;
    bad_root[0]["root"] = "nope";
    CHECK_THROWS_AS(presentation_from_json(g, bad_root), AutomorphismError);
    auto bad_entry = j;
    bad_entry[0]["image"][0][0] = "q";
    CHECK_THROWS_AS(presentation_from_json(g, bad_entry), AutomorphismError);

    auto d = decompose(g, p, DecomposeOptions{true});
    auto dj = decomposition_to_json(g, graph, d);
    CHECK(dj["status"] == "standard");
    CHECK(dj["verified"] == true);
    CHECK(dj.contains("transcript"));
    CHECK(dj.dump() == decomposition_to_json(g, graph, decompose(g, p, DecomposeOptions{true})).dump());
}
