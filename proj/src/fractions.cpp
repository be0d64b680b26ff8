#include "chev/fractions.hpp"

#include <algorithm>

namespace chev {

IntegerRing::value_type IntegerRing::add(value_type a, value_type b) const {
    value_type r;
    if (__builtin_add_overflow(a, b, &r)) throw RingError("integer overflow in addition");
    return r;
}

IntegerRing::value_type IntegerRing::mul(value_type a, value_type b) const {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r)) throw RingError("integer overflow in multiplication");
    return r;
}

MultiplicativeSet<FiniteRingView> finite_multiplicative_set(const Ring& r, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<char> in(r.size(), 0);
    for (Elem m : members) in.at(m) = 1;
    MultiplicativeSet<FiniteRingView> y;
    y.contains = [in = std::move(in)](Elem s) { return s < in.size() && in[s] != 0; };
    y.members = std::move(members);
    y.complete = true;
    return y;
}

MaterializedFractions materialize_fractions(const FractionRing<FiniteRingView>& fr, const std::string& spec) {
    const Ring& r = fr.base().ring;
    const auto& dens = fr.denominators().members;
    using F = Fraction<FiniteRingView>;

    // Enumerate a/s with s running over Y in listed order (1 first when present,
    // so that a/1 representatives are preferred) and group by equivalence.
    std::vector<Elem> order = dens;
    std::stable_partition(order.begin(), order.end(), [&](Elem s) { return s == r.one(); });
    std::vector<F> reps;
    auto class_of = [&](const F& x) -> std::size_t {
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (fr.equal(reps[c], x)) return c;
        return reps.size();
    };
    for (Elem s : order)
        for (Elem a = 0; a < r.size(); ++a) {
            F x{a, s};
            if (class_of(x) == reps.size()) reps.push_back(x);
        }
    const std::size_t n = reps.size();
    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            add[i * n + j] = static_cast<Elem>(class_of(fr.add(reps[i], reps[j])));
            mul[i * n + j] = static_cast<Elem>(class_of(fr.mul(reps[i], reps[j])));
        }
    std::vector<std::string> names;
    for (const auto& x : reps) names.push_back(x.den == r.one() ? r.format(x.num) : fr.format(x));
    Elem one = static_cast<Elem>(class_of(fr.one()));
    Ring out = make_tabulated(std::move(add), std::move(mul), one, std::move(names), spec);
    RingHom canon{r, out, {}};
    canon.table.resize(r.size());
    for (Elem a = 0; a < r.size(); ++a) canon.table[a] = static_cast<Elem>(class_of(fr.embed(a)));
    return {out, std::move(canon), std::move(reps)};
}

}  // namespace chev
