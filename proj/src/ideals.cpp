#include "chev/ideals.hpp"

#include <algorithm>

namespace chev {

namespace {

void require_enumerable(const Ring& r, std::size_t budget) {
    if (r.size() > budget)
        throw UnsupportedError(r.spec() + " has " + std::to_string(r.size()) + " elements, above the enumeration budget");
}

}  // namespace

bool Ideal::contains(Elem a) const { return std::binary_search(elements.begin(), elements.end(), a); }

Ideal ideal_generated(const Ring& r, const std::vector<Elem>& gens) {
    std::vector<char> in(r.size(), 0);
    std::vector<Elem> members{0};
    in[0] = 1;
    std::vector<Elem> multiples;
    for (Elem g : gens)
        for (Elem x = 0; x < r.size(); ++x) {
            Elem m = r.mul(x, g);
            if (!in[m]) {
                in[m] = 1;
                members.push_back(m);
                multiples.push_back(m);
            }
        }
    // Additive closure: each new element added to every multiple.
    for (std::size_t i = 0; i < members.size(); ++i)
        for (Elem m : multiples) {
            Elem s = r.add(members[i], m);
            if (!in[s]) {
                in[s] = 1;
                members.push_back(s);
            }
        }
    std::sort(members.begin(), members.end());
    return {std::move(members), gens};
}

bool is_prime_ideal(const Ring& r, const Ideal& i) {
    if (i.contains(r.one())) return false;
    for (Elem a = 0; a < r.size(); ++a) {
        if (i.contains(a)) continue;
        for (Elem b = 0; b < r.size(); ++b)
            if (!i.contains(b) && i.contains(r.mul(a, b))) return false;
    }
    return true;
}

bool is_maximal_ideal(const Ring& r, const Ideal& i) {
    if (i.contains(r.one())) return false;
    for (Elem a = 0; a < r.size(); ++a) {
        if (i.contains(a)) continue;
        auto gens = i.generators;
        gens.push_back(a);
        if (!ideal_generated(r, gens).contains(r.one())) return false;
    }
    return true;
}

std::vector<Ideal> maximal_ideals(const Ring& r, std::size_t budget) {
    require_enumerable(r, budget);
    std::vector<Ideal> found;
    for (Elem a = 0; a < r.size(); ++a) {
        if (r.is_unit(a)) continue;
        if (std::any_of(found.begin(), found.end(), [&](const Ideal& m) { return m.contains(a); })) continue;
        // Greedy extension of (a) to a maximal ideal. Every maximal ideal has an
        // element outside all the others (prime avoidance), so this finds all.
        Ideal cur = ideal_generated(r, {a});
        for (Elem b = 0; b < r.size(); ++b) {
            if (cur.contains(b)) continue;
            auto gens = cur.generators;
            gens.push_back(b);
            Ideal next = ideal_generated(r, gens);
            if (!next.contains(r.one())) cur = std::move(next);
        }
        found.push_back(std::move(cur));
    }
    std::sort(found.begin(), found.end(), [](const Ideal& x, const Ideal& y) { return x.elements < y.elements; });
    return found;
}

LocalRing localize_at(const Ring& r, const Ideal& prime, std::size_t budget) {
    require_enumerable(r, budget);
    if (!is_prime_ideal(r, prime)) throw RingError("localization requires a prime ideal");
    std::vector<Elem> outside;
    bool all_units = true;
    for (Elem a = 0; a < r.size(); ++a)
        if (!prime.contains(a)) {
            outside.push_back(a);
            all_units = all_units && r.is_unit(a);
        }
    // Denominators already invertible: R_p = R.
    if (all_units) return {r, identity_hom(r), prime};

    std::string gens;
    for (std::size_t i = 0; i < prime.generators.size(); ++i) gens += (i ? ", " : "") + r.format(prime.generators[i]);
    std::string spec = "loc(" + r.spec() + ", " + gens + ")";
    FractionRing<FiniteRingView> fr(FiniteRingView{r}, finite_multiplicative_set(r, outside));
    auto mat = materialize_fractions(fr, spec);
    return {mat.ring, mat.canonical, prime};
}

DiagonalEmbedding diagonal_embedding(const Ring& r, std::size_t budget) {
    auto maxes = maximal_ideals(r, budget);
    DiagonalEmbedding out;
    std::vector<Ring> factors;
    for (const auto& m : maxes) {
        out.locals.push_back(localize_at(r, m, budget));
        factors.push_back(out.locals.back().ring);
    }
    out.product = make_product(factors);
    out.map = RingHom{r, out.product, {}};
    out.map.table.resize(r.size());
    for (Elem a = 0; a < r.size(); ++a) {
        if (factors.size() == 1) {
            out.map.table[a] = out.locals[0].canonical(a);
            continue;
        }
        std::vector<Elem> parts;
        for (const auto& l : out.locals) parts.push_back(l.canonical(a));
        out.map.table[a] = product_join(out.product, parts);
    }
    return out;
}

bool is_local_ring(const Ring& r) {
    std::vector<Elem> nonunits;
    for (Elem a = 0; a < r.size(); ++a)
        if (!r.is_unit(a)) nonunits.push_back(a);
    for (Elem a : nonunits)
        for (Elem b : nonunits)
            if (r.is_unit(r.add(a, b))) return false;
    return true;
}

bool is_idempotent_system(const Ring& r, const IdempotentSystem& e) {
    Elem sum = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (r.mul(e[i], e[i]) != e[i]) return false;
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (r.mul(e[i], e[j]) != 0) return false;
        sum = r.add(sum, e[i]);
    }
    return !e.empty() && sum == r.one();
}

std::vector<IdempotentSystem> find_idempotent_systems(const Ring& r, std::size_t k) {
    std::vector<IdempotentSystem> out;
    if (k == 0) return out;
    std::vector<Elem> idem;
    for (Elem a = 0; a < r.size(); ++a)
        if (r.mul(a, a) == a) idem.push_back(a);
    IdempotentSystem cur;
    auto rec = [&](auto&& self, Elem partial) -> void {
        if (cur.size() + 1 == k) {
            Elem last = r.sub(r.one(), partial);
            cur.push_back(last);
            if (is_idempotent_system(r, cur)) out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (Elem e : idem) {
            bool orth = std::all_of(cur.begin(), cur.end(), [&](Elem f) { return r.mul(e, f) == 0; });
            if (!orth) continue;
            cur.push_back(e);
            self(self, r.add(partial, e));
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace chev
