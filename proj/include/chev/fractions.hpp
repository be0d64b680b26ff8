#pragma once

// Rings of fractions Y^{-1}R over any commutative ring satisfying the
// ElementRing concept. Equality of a/s and b/t is the relation
// (a t - b s) u = 0 for some u in Y, decided by searching a witness list.

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chev/ring.hpp"

namespace chev {

template <class R>
concept ElementRing = requires(const R& r, typename R::value_type a, typename R::value_type b) {
    { r.add(a, b) } -> std::convertible_to<typename R::value_type>;
    { r.mul(a, b) } -> std::convertible_to<typename R::value_type>;
    { r.neg(a) } -> std::convertible_to<typename R::value_type>;
    { r.zero() } -> std::convertible_to<typename R::value_type>;
    { r.one() } -> std::convertible_to<typename R::value_type>;
    { r.equal(a, b) } -> std::convertible_to<bool>;
    { r.format(a) } -> std::convertible_to<std::string>;
};

/// The integers with overflow-checked 64-bit arithmetic.
struct IntegerRing {
    using value_type = std::int64_t;
    value_type add(value_type a, value_type b) const;
    value_type mul(value_type a, value_type b) const;
    value_type neg(value_type a) const { return -a; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool equal(value_type a, value_type b) const { return a == b; }
    std::string format(value_type a) const { return std::to_string(a); }
};

/// Adapter presenting a finite Ring through the ElementRing concept.
struct FiniteRingView {
    using value_type = Elem;
    Ring ring;
    value_type add(value_type a, value_type b) const { return ring.add(a, b); }
    value_type mul(value_type a, value_type b) const { return ring.mul(a, b); }
    value_type neg(value_type a) const { return ring.neg(a); }
    value_type zero() const { return 0; }
    value_type one() const { return ring.one(); }
    bool equal(value_type a, value_type b) const { return a == b; }
    std::string format(value_type a) const { return ring.format(a); }
};

template <ElementRing R>
struct Fraction {
    typename R::value_type num;
    typename R::value_type den;
};

/// Multiplicatively closed set. `members` is the whole set when `complete`,
/// otherwise a finite list of witnesses tried for the equivalence; `contains`
/// decides membership.
template <ElementRing R>
struct MultiplicativeSet {
    std::function<bool(typename R::value_type)> contains;
    std::vector<typename R::value_type> members;
    bool complete = false;
};

template <ElementRing R>
class FractionRing {
  public:
    using value_type = Fraction<R>;
    using base_value = typename R::value_type;

    FractionRing(R base, MultiplicativeSet<R> y) : base_(std::move(base)), y_(std::move(y)) {
        if (!y_.contains(base_.one())) throw RingError("multiplicative set must contain 1");
        if (y_.complete) {
            for (const auto& s : y_.members) {
                if (!y_.contains(s)) throw RingError("listed element outside the multiplicative set");
                for (const auto& t : y_.members)
                    if (!y_.contains(base_.mul(s, t)))
                        throw RingError("set is not multiplicatively closed: " + base_.format(s) + " * " +
                                        base_.format(t));
            }
        }
    }

    const R& base() const { return base_; }
    const MultiplicativeSet<R>& denominators() const { return y_; }

    value_type make(base_value a, base_value s) const {
        if (!y_.contains(s)) throw RingError("denominator " + base_.format(s) + " is not in the multiplicative set");
        return {a, s};
    }
    value_type embed(base_value a) const { return {a, base_.one()}; }

    value_type add(const value_type& x, const value_type& y) const {
        return {base_.add(base_.mul(x.num, y.den), base_.mul(y.num, x.den)), base_.mul(x.den, y.den)};
    }
    value_type mul(const value_type& x, const value_type& y) const {
        return {base_.mul(x.num, y.num), base_.mul(x.den, y.den)};
    }
    value_type neg(const value_type& x) const { return {base_.neg(x.num), x.den}; }
    value_type zero() const { return {base_.zero(), base_.one()}; }
    value_type one() const { return {base_.one(), base_.one()}; }

    /// A witness u in Y with (a t - b s) u = 0, if one is found.
    std::optional<base_value> equivalence_witness(const value_type& x, const value_type& y) const {
        base_value diff = base_.add(base_.mul(x.num, y.den), base_.neg(base_.mul(y.num, x.den)));
        if (base_.equal(diff, base_.zero())) return base_.one();
        for (const auto& u : y_.members)
            if (base_.equal(base_.mul(diff, u), base_.zero())) return u;
        return std::nullopt;
    }
    bool equal(const value_type& x, const value_type& y) const { return equivalence_witness(x, y).has_value(); }
    std::string format(const value_type& x) const { return base_.format(x.num) + "/" + base_.format(x.den); }

  private:
    R base_;
    MultiplicativeSet<R> y_;
};

/// Finite multiplicative set given explicitly.
MultiplicativeSet<FiniteRingView> finite_multiplicative_set(const Ring& r, std::vector<Elem> members);

struct MaterializedFractions {
    Ring ring;       // equivalence classes as a tabulated ring
    RingHom canonical;  // a -> class of a/1
    std::vector<Fraction<FiniteRingView>> representatives;  // per class code
};

/// Y^{-1}R for finite R and finite Y, with classes as element codes.
/// `spec` names the resulting ring.
MaterializedFractions materialize_fractions(const FractionRing<FiniteRingView>& fr, const std::string& spec);

}  // namespace chev
