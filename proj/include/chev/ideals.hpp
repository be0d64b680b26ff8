#pragma once

// Ideals of finite rings, localization at maximal ideals, the diagonal
// embedding into the product of localizations, and idempotent systems.

#include <cstddef>
#include <string>
#include <vector>

#include "chev/fractions.hpp"
#include "chev/ring.hpp"

namespace chev {

/// Default cap on exhaustive enumerations over ring elements.
inline constexpr std::size_t kEnumerationBudget = 10000;

struct Ideal {
    std::vector<Elem> elements;    // sorted
    std::vector<Elem> generators;  // witnesses: the ideal is generated by these

    bool contains(Elem a) const;
    std::size_t size() const { return elements.size(); }
    bool operator==(const Ideal& o) const { return elements == o.elements; }
};

Ideal ideal_generated(const Ring& r, const std::vector<Elem>& gens);
bool is_prime_ideal(const Ring& r, const Ideal& i);
bool is_maximal_ideal(const Ring& r, const Ideal& i);

/// All maximal ideals, sorted by element list.
std::vector<Ideal> maximal_ideals(const Ring& r, std::size_t budget = kEnumerationBudget);

struct LocalRing {
    Ring ring;
    RingHom canonical;  // a -> a/1
    Ideal prime;        // the ideal localized at (in the base ring)
};

/// R localized at a prime ideal (denominators outside the ideal).
LocalRing localize_at(const Ring& r, const Ideal& prime, std::size_t budget = kEnumerationBudget);

struct DiagonalEmbedding {
    Ring product;
    RingHom map;
    std::vector<LocalRing> locals;
};

/// a -> ((a/1)_m) over all maximal ideals m.
DiagonalEmbedding diagonal_embedding(const Ring& r, std::size_t budget = kEnumerationBudget);

/// Unique maximal ideal check: non-units are closed under addition.
bool is_local_ring(const Ring& r);

using IdempotentSystem = std::vector<Elem>;

bool is_idempotent_system(const Ring& r, const IdempotentSystem& e);
/// Every ordered k-tuple of pairwise orthogonal idempotents summing to 1.
std::vector<IdempotentSystem> find_idempotent_systems(const Ring& r, std::size_t k);

}  // namespace chev
