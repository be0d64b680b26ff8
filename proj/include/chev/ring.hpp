#pragma once

// Finite commutative rings with 1, addressed through small integer codes.
//
// Every finite ring in the library is a value of type `Ring`: a cheap handle
// onto an immutable implementation. Elements are codes in [0, size()), so
// equality of elements is equality of codes (each implementation keeps a
// canonical form). Rings of at most kTableLimit elements get their addition
// and multiplication tabulated on construction.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chev {

using Elem = std::uint32_t;

class RingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation needs a capability the ring does not have
/// (enumeration beyond budget, non-cyclic additive coordinates, ...).
class UnsupportedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class RingKind { IntegersMod, Product, PolyQuotient, Tabulated };

class RingImpl {
  public:
    virtual ~RingImpl() = default;

    virtual RingKind kind() const = 0;
    virtual std::size_t size() const = 0;
    virtual Elem one() const = 0;
    virtual Elem add(Elem a, Elem b) const = 0;
    virtual Elem neg(Elem a) const = 0;
    virtual Elem mul(Elem a, Elem b) const = 0;
    virtual std::optional<Elem> inverse(Elem a) const;
    virtual std::string format(Elem a) const = 0;
    virtual std::string spec() const = 0;

    // Additive group as a direct sum of cyclic groups: coordinates of an
    // element w.r.t. additive_basis(), the j-th taken modulo additive_orders()[j].
    virtual std::vector<Elem> additive_basis() const = 0;
    virtual std::vector<std::uint64_t> additive_orders() const = 0;
    virtual void additive_coords(Elem a, std::uint64_t* out) const = 0;

    /// Modulus n for Z/n, zero otherwise.
    virtual std::uint64_t modulus() const { return 0; }
};

class Ring {
  public:
    static constexpr std::size_t kTableLimit = 512;

    Ring() = default;
    explicit Ring(std::shared_ptr<const RingImpl> impl);

    bool valid() const { return impl_ != nullptr; }
    const RingImpl& impl() const { return *impl_; }
    RingKind kind() const { return impl_->kind(); }

    std::size_t size() const { return size_; }
    Elem zero() const { return 0; }
    Elem one() const { return one_; }

    Elem add(Elem a, Elem b) const {
        return tables_ ? tables_->add[a * size_ + b] : impl_->add(a, b);
    }
    Elem mul(Elem a, Elem b) const {
        return tables_ ? tables_->mul[a * size_ + b] : impl_->mul(a, b);
    }
    Elem neg(Elem a) const { return tables_ ? tables_->neg[a] : impl_->neg(a); }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    std::optional<Elem> inverse(Elem a) const;
    bool is_unit(Elem a) const { return inverse(a).has_value(); }
    /// Inverse or RingError.
    Elem inv(Elem a) const;

    /// a^e; negative exponents require a unit.
    Elem pow(Elem a, std::int64_t e) const;
    /// Image of the integer k under Z -> R.
    Elem from_int(std::int64_t k) const;
    /// Additive order of 1.
    std::uint64_t characteristic() const { return characteristic_; }
    std::uint64_t modulus() const { return impl_->modulus(); }

    std::vector<Elem> elements() const;
    std::vector<Elem> units() const;

    std::string format(Elem a) const { return impl_->format(a); }
    std::string spec() const { return impl_->spec(); }

    std::vector<Elem> additive_basis() const { return impl_->additive_basis(); }
    std::vector<std::uint64_t> additive_orders() const { return impl_->additive_orders(); }
    std::size_t additive_rank() const { return additive_orders_.size(); }
    /// Least common multiple of the additive orders (the exponent of (R,+)).
    std::uint64_t additive_exponent() const { return exponent_; }
    /// Coordinates scaled into Z/exponent: coordinate j is multiplied by
    /// exponent / order_j so that every coordinate lives in one modulus.
    void exponent_coords(Elem a, std::uint64_t* out) const;
    /// Inverse of exponent_coords.
    Elem from_exponent_coords(const std::uint64_t* coords) const;

    bool same_as(const Ring& other) const { return impl_ == other.impl_; }
    bool operator==(const Ring& other) const;

  private:
    struct Tables {
        std::vector<Elem> add, mul, neg;
        std::vector<std::int64_t> inv;  // -1 when not a unit
    };

    std::shared_ptr<const RingImpl> impl_;
    std::shared_ptr<const Tables> tables_;
    std::size_t size_ = 0;
    Elem one_ = 0;
    std::uint64_t characteristic_ = 0;
    std::uint64_t exponent_ = 0;
    std::vector<std::uint64_t> additive_orders_;
};

// ---- constructors ----------------------------------------------------------

/// Z/n, n >= 2.
Ring make_zmod(std::uint64_t n);

/// Componentwise product R_1 x ... x R_k.
Ring make_product(const std::vector<Ring>& factors);
/// Factor rings of a product ring (empty for other kinds).
std::vector<Ring> product_factors(const Ring& r);
/// Component decomposition / assembly for product rings.
std::vector<Elem> product_split(const Ring& r, Elem a);
Elem product_join(const Ring& r, const std::vector<Elem>& parts);

/// base[var]/(f) with f monic of degree k >= 1, given by its low coefficients
/// f = var^k + c_{k-1} var^{k-1} + ... + c_0, `low` = {c_0, ..., c_{k-1}}.
Ring make_poly_quotient(const Ring& base, const std::vector<Elem>& low, std::string var = "y");
/// base[var]/(var^k - lambda).
Ring make_root_extension(const Ring& base, Elem lambda, unsigned k, std::string var = "y");
/// GF(p^k) as Z/p[w]/(f) with f the lexicographically first monic irreducible.
Ring make_galois_field(std::uint64_t q);

struct PolyQuotientInfo {
    Ring base;
    std::vector<Elem> low;  // modulus coefficients as above
    std::string var;
};
std::optional<PolyQuotientInfo> poly_quotient_info(const Ring& r);
/// Coefficients (in the base ring) of an element of a polynomial quotient.
std::vector<Elem> poly_coeffs(const Ring& r, Elem a);
Elem poly_from_coeffs(const Ring& r, const std::vector<Elem>& coeffs);

/// Ring given by explicit tables over codes 0..n-1 (code 0 must be zero).
Ring make_tabulated(std::vector<Elem> add, std::vector<Elem> mul, Elem one, std::vector<std::string> names,
                    std::string spec);

// ---- homomorphisms ---------------------------------------------------------

/// A map between finite rings stored as its value table.
struct RingHom {
    Ring src;
    Ring dst;
    std::vector<Elem> table;

    Elem operator()(Elem a) const { return table[a]; }
    bool preserves_structure() const;  // exhaustive check of +, *, 1
    bool injective() const;
    bool bijective() const;
};

RingHom identity_hom(const Ring& r);
/// Canonical inclusion of the base ring into a polynomial quotient (constants).
RingHom base_embedding(const Ring& ext);
RingHom compose(const RingHom& outer, const RingHom& inner);
RingHom inverse_hom(const RingHom& bijective);

/// All ring automorphisms of a finite ring, identity first, deterministic order.
std::vector<RingHom> ring_automorphisms(const Ring& r, std::size_t budget = 100000);

/// Exhaustive check of the commutative ring axioms (size^3 triples).
/// Returns a description of the first violated axiom, or nullopt.
std::optional<std::string> check_ring_axioms(const Ring& r);

}  // namespace chev
