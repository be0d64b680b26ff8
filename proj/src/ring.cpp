#include "chev/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chev {

namespace {

std::uint64_t egcd_inverse(std::uint64_t a, std::uint64_t n, bool& ok) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    ok = (r == 1);
    if (t < 0) t += static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(t);
}

class ZModImpl final : public RingImpl {
  public:
    explicit ZModImpl(std::uint64_t n) : n_(n) {}
    RingKind kind() const override { return RingKind::IntegersMod; }
    std::size_t size() const override { return n_; }
    Elem one() const override { return 1; }
    Elem add(Elem a, Elem b) const override {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Elem>(s >= n_ ? s - n_ : s);
    }
    Elem neg(Elem a) const override { return a == 0 ? 0 : static_cast<Elem>(n_ - a); }
    Elem mul(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t(a) * b) % n_); }
    std::optional<Elem> inverse(Elem a) const override {
        bool ok = false;
        std::uint64_t v = egcd_inverse(a, n_, ok);
        if (!ok) return std::nullopt;
        return static_cast<Elem>(v);
    }
    std::string format(Elem a) const override { return std::to_string(a); }
    std::string spec() const override { return "Z/" + std::to_string(n_); }
    std::vector<Elem> additive_basis() const override { return {1}; }
    std::vector<std::uint64_t> additive_orders() const override { return {n_}; }
    void additive_coords(Elem a, std::uint64_t* out) const override { out[0] = a; }
    std::uint64_t modulus() const override { return n_; }

  private:
    std::uint64_t n_;
};

class ProductImpl final : public RingImpl {
  public:
    explicit ProductImpl(std::vector<Ring> factors) : factors_(std::move(factors)) {
        std::size_t stride = 1;
        for (const auto& f : factors_) {
            strides_.push_back(stride);
            stride *= f.size();
        }
        size_ = stride;
    }
    RingKind kind() const override { return RingKind::Product; }
    std::size_t size() const override { return size_; }
    Elem one() const override {
        Elem r = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) r += static_cast<Elem>(factors_[i].one() * strides_[i]);
        return r;
    }
    Elem add(Elem a, Elem b) const override {
        return combine(a, b, [](const Ring& f, Elem x, Elem y) { return f.add(x, y); });
    }
    Elem mul(Elem a, Elem b) const override {
        return combine(a, b, [](const Ring& f, Elem x, Elem y) { return f.mul(x, y); });
    }
    Elem neg(Elem a) const override {
        Elem r = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) r += static_cast<Elem>(factors_[i].neg(part(a, i)) * strides_[i]);
        return r;
    }
    std::optional<Elem> inverse(Elem a) const override {
        Elem r = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            auto v = factors_[i].inverse(part(a, i));
            if (!v) return std::nullopt;
            r += static_cast<Elem>(*v * strides_[i]);
        }
        return r;
    }
    std::string format(Elem a) const override {
        std::string s = "(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += ",";
            s += factors_[i].format(part(a, i));
        }
        return s + ")";
    }
    std::string spec() const override {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += " x ";
            bool wrap = factors_[i].kind() == RingKind::Product;
            s += wrap ? "(" + factors_[i].spec() + ")" : factors_[i].spec();
        }
        return s;
    }
    std::vector<Elem> additive_basis() const override {
        std::vector<Elem> out;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            for (Elem b : factors_[i].additive_basis()) out.push_back(static_cast<Elem>(b * strides_[i]));
        return out;
    }
    std::vector<std::uint64_t> additive_orders() const override {
        std::vector<std::uint64_t> out;
        for (const auto& f : factors_) {
            auto o = f.additive_orders();
            out.insert(out.end(), o.begin(), o.end());
        }
        return out;
    }
    void additive_coords(Elem a, std::uint64_t* out) const override {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            factors_[i].impl().additive_coords(part(a, i), out);
            out += factors_[i].additive_rank();
        }
    }

    Elem part(Elem a, std::size_t i) const { return static_cast<Elem>((a / strides_[i]) % factors_[i].size()); }
    const std::vector<Ring>& factors() const { return factors_; }
    const std::vector<std::size_t>& strides() const { return strides_; }

  private:
    template <class F>
    Elem combine(Elem a, Elem b, F f) const {
        Elem r = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            r += static_cast<Elem>(f(factors_[i], part(a, i), part(b, i)) * strides_[i]);
        return r;
    }

    std::vector<Ring> factors_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 0;
};

class PolyQuotientImpl final : public RingImpl {
  public:
    PolyQuotientImpl(Ring base, std::vector<Elem> low, std::string var)
        : base_(std::move(base)), low_(std::move(low)), var_(std::move(var)) {
        std::size_t s = 1;
        for (std::size_t i = 0; i < low_.size(); ++i) s *= base_.size();
        size_ = s;
    }
    RingKind kind() const override { return RingKind::PolyQuotient; }
    std::size_t size() const override { return size_; }
    Elem one() const override { return base_.one(); }
    Elem add(Elem a, Elem b) const override {
        auto x = coeffs(a), y = coeffs(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = base_.add(x[i], y[i]);
        return encode(x);
    }
    Elem neg(Elem a) const override {
        auto x = coeffs(a);
        for (auto& c : x) c = base_.neg(c);
        return encode(x);
    }
    Elem mul(Elem a, Elem b) const override {
        const std::size_t k = low_.size();
        auto x = coeffs(a), y = coeffs(b);
        std::vector<Elem> prod(2 * k - 1, base_.zero());
        for (std::size_t i = 0; i < k; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < k; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(x[i], y[j]));
        }
        for (std::size_t d = 2 * k - 2; d >= k; --d) {
            Elem c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (std::size_t i = 0; i < k; ++i) prod[d - k + i] = base_.sub(prod[d - k + i], base_.mul(c, low_[i]));
        }
        prod.resize(k);
        return encode(prod);
    }
    std::string format(Elem a) const override {
        auto x = coeffs(a);
        std::string s;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            std::string c = base_.format(x[i]);
            if (base_.kind() == RingKind::PolyQuotient || base_.kind() == RingKind::Product) c = "(" + c + ")";
            std::string term;
            if (i == 0)
                term = c;
            else {
                term = (x[i] == base_.one()) ? "" : c + "*";
                term += var_ + (i > 1 ? "^" + std::to_string(i) : "");
            }
            s += (s.empty() ? "" : "+") + term;
        }
        return s.empty() ? "0" : s;
    }
    std::string spec() const override {
        const std::size_t k = low_.size();
        std::string b = base_.spec();
        if (base_.kind() != RingKind::IntegersMod) b = "(" + b + ")";
        std::string f = var_ + (k > 1 ? "^" + std::to_string(k) : "");
        for (std::size_t i = k; i-- > 0;) {
            Elem c = low_[i];
            if (c == 0) continue;
            std::string mono = i == 0 ? "" : var_ + (i > 1 ? "^" + std::to_string(i) : "");
            std::string sign = " + ";
            std::string coef;
            if (base_.kind() == RingKind::IntegersMod) {
                std::uint64_t n = base_.modulus();
                std::uint64_t v = c;
                if (v > n / 2) {
                    sign = " - ";
                    v = n - v;
                }
                coef = std::to_string(v);
            } else {
                coef = "(" + base_.format(c) + ")";
            }
            if (!mono.empty()) coef = (coef == "1") ? mono : coef + "*" + mono;
            f += sign + coef;
        }
        return b + "[" + var_ + "]/(" + f + ")";
    }
    std::vector<Elem> additive_basis() const override {
        std::vector<Elem> out;
        auto bb = base_.additive_basis();
        for (std::size_t i = 0; i < low_.size(); ++i)
            for (Elem b : bb) {
                std::vector<Elem> c(low_.size(), 0);
                c[i] = b;
                out.push_back(encode(c));
            }
        return out;
    }
    std::vector<std::uint64_t> additive_orders() const override {
        std::vector<std::uint64_t> out;
        auto bo = base_.additive_orders();
        for (std::size_t i = 0; i < low_.size(); ++i) out.insert(out.end(), bo.begin(), bo.end());
        return out;
    }
    void additive_coords(Elem a, std::uint64_t* out) const override {
        auto x = coeffs(a);
        for (Elem c : x) {
            base_.impl().additive_coords(c, out);
            out += base_.additive_rank();
        }
    }

    std::vector<Elem> coeffs(Elem a) const {
        std::vector<Elem> c(low_.size());
        std::size_t b = base_.size();
        for (auto& x : c) {
            x = static_cast<Elem>(a % b);
            a = static_cast<Elem>(a / b);
        }
        return c;
    }
    Elem encode(const std::vector<Elem>& c) const {
        std::uint64_t r = 0;
        for (std::size_t i = c.size(); i-- > 0;) r = r * base_.size() + c[i];
        return static_cast<Elem>(r);
    }
    const Ring& base() const { return base_; }
    const std::vector<Elem>& low() const { return low_; }
    const std::string& var() const { return var_; }

  private:
    Ring base_;
    std::vector<Elem> low_;
    std::string var_;
    std::size_t size_ = 0;
};

class TabulatedImpl final : public RingImpl {
  public:
    TabulatedImpl(std::vector<Elem> add, std::vector<Elem> mul, Elem one, std::vector<std::string> names,
                  std::string spec)
        : add_(std::move(add)), mul_(std::move(mul)), one_(one), names_(std::move(names)), spec_(std::move(spec)) {
        n_ = names_.size();
        neg_.assign(n_, 0);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (add_[a * n_ + b] == 0) {
                    neg_[a] = static_cast<Elem>(b);
                    break;
                }
        // Additive coordinates exist when (R,+) is cyclic; search a generator.
        for (std::size_t g = 0; g < n_ && !cyclic_; ++g) {
            std::vector<std::int64_t> log(n_, -1);
            Elem x = 0;
            std::size_t k = 0;
            do {
                log[x] = static_cast<std::int64_t>(k);
                x = add_[x * n_ + g];
                ++k;
            } while (x != 0 && k <= n_);
            if (k == n_) {
                cyclic_ = true;
                generator_ = static_cast<Elem>(g);
                dlog_ = std::move(log);
            }
        }
    }
    RingKind kind() const override { return RingKind::Tabulated; }
    std::size_t size() const override { return n_; }
    Elem one() const override { return one_; }
    Elem add(Elem a, Elem b) const override { return add_[a * n_ + b]; }
    Elem neg(Elem a) const override { return neg_[a]; }
    Elem mul(Elem a, Elem b) const override { return mul_[a * n_ + b]; }
    std::string format(Elem a) const override { return names_[a]; }
    std::string spec() const override { return spec_; }
    std::vector<Elem> additive_basis() const override {
        require_cyclic();
        return {generator_};
    }
    std::vector<std::uint64_t> additive_orders() const override {
        require_cyclic();
        return {n_};
    }
    void additive_coords(Elem a, std::uint64_t* out) const override {
        require_cyclic();
        out[0] = static_cast<std::uint64_t>(dlog_[a]);
    }

  private:
    void require_cyclic() const {
        if (!cyclic_) throw UnsupportedError("additive group of " + spec_ + " is not cyclic");
    }

    std::vector<Elem> add_, mul_, neg_;
    Elem one_;
    std::vector<std::string> names_;
    std::string spec_;
    std::size_t n_ = 0;
    bool cyclic_ = false;
    Elem generator_ = 0;
    std::vector<std::int64_t> dlog_;
};

}  // namespace

std::optional<Elem> RingImpl::inverse(Elem a) const {
    const Elem u = one();
    for (std::size_t b = 0; b < size(); ++b)
        if (mul(a, static_cast<Elem>(b)) == u) return static_cast<Elem>(b);
    return std::nullopt;
}

// ---- Ring handle -------------------------------------------------------------

Ring::Ring(std::shared_ptr<const RingImpl> impl) : impl_(std::move(impl)) {
    size_ = impl_->size();
    if (size_ < 2) throw RingError("the zero ring is not admitted");
    one_ = impl_->one();
    if (one_ == 0) throw RingError("ring with 1 = 0 is not admitted");
    if (size_ <= kTableLimit) {
        auto t = std::make_shared<Tables>();
        t->add.resize(size_ * size_);
        t->mul.resize(size_ * size_);
        t->neg.resize(size_);
        for (std::size_t a = 0; a < size_; ++a) {
            t->neg[a] = impl_->neg(static_cast<Elem>(a));
            for (std::size_t b = 0; b < size_; ++b) {
                t->add[a * size_ + b] = impl_->add(static_cast<Elem>(a), static_cast<Elem>(b));
                t->mul[a * size_ + b] = impl_->mul(static_cast<Elem>(a), static_cast<Elem>(b));
            }
        }
        t->inv.assign(size_, -1);
        for (std::size_t a = 0; a < size_; ++a) {
            if (t->inv[a] >= 0) continue;
            for (std::size_t b = 0; b < size_; ++b)
                if (t->mul[a * size_ + b] == one_) {
                    t->inv[a] = static_cast<std::int64_t>(b);
                    t->inv[b] = static_cast<std::int64_t>(a);
                    break;
                }
        }
        tables_ = std::move(t);
    }
    Elem x = one_;
    characteristic_ = 1;
    while (x != 0) {
        x = add(x, one_);
        ++characteristic_;
    }
    try {
        additive_orders_ = impl_->additive_orders();
        exponent_ = 1;
        for (auto o : additive_orders_) exponent_ = std::lcm(exponent_, o);
    } catch (const UnsupportedError&) {
        additive_orders_.clear();
        exponent_ = 0;
    }
}

std::optional<Elem> Ring::inverse(Elem a) const {
    if (tables_) {
        auto v = tables_->inv[a];
        if (v < 0) return std::nullopt;
        return static_cast<Elem>(v);
    }
    return impl_->inverse(a);
}

Elem Ring::inv(Elem a) const {
    auto v = inverse(a);
    if (!v) throw RingError("element " + format(a) + " is not invertible in " + spec());
    return *v;
}

Elem Ring::pow(Elem a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem r = one_;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Ring::from_int(std::int64_t k) const {
    if (auto n = impl_->modulus()) {
        std::int64_t m = static_cast<std::int64_t>(n);
        std::int64_t r = k % m;
        if (r < 0) r += m;
        return static_cast<Elem>(r);
    }
    bool negative = k < 0;
    std::uint64_t u = negative ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    u %= characteristic_;
    Elem r = 0, base = one_;
    while (u > 0) {
        if (u & 1) r = add(r, base);
        base = add(base, base);
        u >>= 1;
    }
    return negative ? neg(r) : r;
}

std::vector<Elem> Ring::elements() const {
    std::vector<Elem> v(size_);
    std::iota(v.begin(), v.end(), Elem{0});
    return v;
}

std::vector<Elem> Ring::units() const {
    std::vector<Elem> v;
    for (std::size_t a = 0; a < size_; ++a)
        if (is_unit(static_cast<Elem>(a))) v.push_back(static_cast<Elem>(a));
    return v;
}

void Ring::exponent_coords(Elem a, std::uint64_t* out) const {
    if (exponent_ == 0) throw UnsupportedError("no additive coordinates for " + spec());
    impl_->additive_coords(a, out);
    for (std::size_t j = 0; j < additive_orders_.size(); ++j) out[j] = (out[j] * (exponent_ / additive_orders_[j])) % exponent_;
}

Elem Ring::from_exponent_coords(const std::uint64_t* coords) const {
    if (exponent_ == 0) throw UnsupportedError("no additive coordinates for " + spec());
    auto basis = impl_->additive_basis();
    Elem r = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        std::uint64_t scale = exponent_ / additive_orders_[j];
        if (coords[j] % scale != 0) throw RingError("coordinate vector outside the additive image");
        std::uint64_t k = coords[j] / scale;
        Elem term = 0, b = basis[j];
        while (k > 0) {
            if (k & 1) term = add(term, b);
            b = add(b, b);
            k >>= 1;
        }
        r = add(r, term);
    }
    return r;
}

bool Ring::operator==(const Ring& other) const {
    if (impl_ == other.impl_) return true;
    if (!impl_ || !other.impl_) return false;
    return size_ == other.size_ && spec() == other.spec();
}

// ---- constructors ------------------------------------------------------------

Ring make_zmod(std::uint64_t n) {
    if (n < 2) throw RingError("Z/" + std::to_string(n) + " is the zero ring or invalid");
    if (n > (1ull << 31)) throw RingError("modulus too large");
    return Ring(std::make_shared<ZModImpl>(n));
}

Ring make_product(const std::vector<Ring>& factors) {
    if (factors.empty()) throw RingError("empty product");
    if (factors.size() == 1) return factors.front();
    std::uint64_t s = 1;
    for (const auto& f : factors) {
        s *= f.size();
        if (s > (1ull << 31)) throw RingError("product ring too large");
    }
    return Ring(std::make_shared<ProductImpl>(factors));
}

std::vector<Ring> product_factors(const Ring& r) {
    if (r.kind() != RingKind::Product) return {};
    return static_cast<const ProductImpl&>(r.impl()).factors();
}

std::vector<Elem> product_split(const Ring& r, Elem a) {
    const auto& p = static_cast<const ProductImpl&>(r.impl());
    std::vector<Elem> out;
    for (std::size_t i = 0; i < p.factors().size(); ++i) out.push_back(p.part(a, i));
    return out;
}

Elem product_join(const Ring& r, const std::vector<Elem>& parts) {
    const auto& p = static_cast<const ProductImpl&>(r.impl());
    Elem x = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) x += static_cast<Elem>(parts[i] * p.strides()[i]);
    return x;
}

Ring make_poly_quotient(const Ring& base, const std::vector<Elem>& low, std::string var) {
    if (low.empty()) throw RingError("modulus polynomial must have degree >= 1");
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < low.size(); ++i) {
        s *= base.size();
        if (s > (1ull << 31)) throw RingError("extension ring too large");
    }
    return Ring(std::make_shared<PolyQuotientImpl>(base, low, std::move(var)));
}

Ring make_root_extension(const Ring& base, Elem lambda, unsigned k, std::string var) {
    if (k < 1) throw RingError("root degree must be positive");
    if (!base.is_unit(lambda))
        throw RingError("adjoined root of " + base.format(lambda) + ": element is not invertible in " + base.spec());
    std::vector<Elem> low(k, 0);
    low[0] = base.neg(lambda);
    return make_poly_quotient(base, low, std::move(var));
}

Ring make_galois_field(std::uint64_t q) {
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    unsigned k = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++k;
    }
    if (q < 2 || t != 1) throw RingError("GF(" + std::to_string(q) + "): order is not a prime power");
    Ring fp = make_zmod(p);
    if (k == 1) return fp;
    // Lexicographically first monic f of degree k: irreducible iff the quotient
    // has no zero divisors (every nonzero element is a unit).
    std::vector<Elem> low(k, 0);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < k; ++i) {
            low[i] = static_cast<Elem>(c % p);
            c /= p;
        }
        if (low[0] == 0) continue;
        Ring cand = make_poly_quotient(fp, low, "w");
        bool field = true;
        for (Elem a = 1; a < cand.size() && field; ++a) field = cand.is_unit(a);
        if (field) return cand;
    }
    throw RingError("no irreducible polynomial found");
}

std::optional<PolyQuotientInfo> poly_quotient_info(const Ring& r) {
    if (r.kind() != RingKind::PolyQuotient) return std::nullopt;
    const auto& p = static_cast<const PolyQuotientImpl&>(r.impl());
    return PolyQuotientInfo{p.base(), p.low(), p.var()};
}

std::vector<Elem> poly_coeffs(const Ring& r, Elem a) {
    return static_cast<const PolyQuotientImpl&>(r.impl()).coeffs(a);
}

Elem poly_from_coeffs(const Ring& r, const std::vector<Elem>& coeffs) {
    return static_cast<const PolyQuotientImpl&>(r.impl()).encode(coeffs);
}

Ring make_tabulated(std::vector<Elem> add, std::vector<Elem> mul, Elem one, std::vector<std::string> names,
                    std::string spec) {
    const std::size_t n = names.size();
    if (add.size() != n * n || mul.size() != n * n) throw RingError("table sizes do not match element count");
    return Ring(std::make_shared<TabulatedImpl>(std::move(add), std::move(mul), one, std::move(names), std::move(spec)));
}

// ---- homomorphisms -------------------------------------------------------------

bool RingHom::preserves_structure() const {
    if (table.size() != src.size()) return false;
    if (table[src.one()] != dst.one() || table[0] != 0) return false;
    for (Elem a = 0; a < src.size(); ++a)
        for (Elem b = 0; b < src.size(); ++b) {
            if (table[src.add(a, b)] != dst.add(table[a], table[b])) return false;
            if (table[src.mul(a, b)] != dst.mul(table[a], table[b])) return false;
        }
    return true;
}

bool RingHom::injective() const {
    std::vector<char> seen(dst.size(), 0);
    for (Elem v : table) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool RingHom::bijective() const { return src.size() == dst.size() && injective(); }

RingHom identity_hom(const Ring& r) { return RingHom{r, r, r.elements()}; }

RingHom base_embedding(const Ring& ext) {
    auto info = poly_quotient_info(ext);
    if (!info) throw RingError(ext.spec() + " is not a polynomial quotient");
    RingHom h{info->base, ext, {}};
    h.table.resize(info->base.size());
    for (Elem a = 0; a < info->base.size(); ++a) {
        std::vector<Elem> c(info->low.size(), 0);
        c[0] = a;
        h.table[a] = poly_from_coeffs(ext, c);
    }
    return h;
}

RingHom compose(const RingHom& outer, const RingHom& inner) {
    RingHom h{inner.src, outer.dst, {}};
    h.table.resize(inner.table.size());
    for (std::size_t a = 0; a < inner.table.size(); ++a) h.table[a] = outer.table[inner.table[a]];
    return h;
}

RingHom inverse_hom(const RingHom& f) {
    if (!f.bijective()) throw RingError("homomorphism is not bijective");
    RingHom h{f.dst, f.src, {}};
    h.table.resize(f.table.size());
    for (std::size_t a = 0; a < f.table.size(); ++a) h.table[f.table[a]] = static_cast<Elem>(a);
    return h;
}

namespace {

// Closure of `seed` under + and * (membership bitmap).
std::vector<char> generated_subring(const Ring& r, const std::vector<Elem>& seed) {
    std::vector<char> in(r.size(), 0);
    std::vector<Elem> members;
    auto push = [&](Elem x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
        }
    };
    push(0);
    push(r.one());
    for (Elem s : seed) push(s);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            push(r.add(members[i], members[j]));
            push(r.mul(members[i], members[j]));
            push(r.neg(members[i]));
        }
    return in;
}

// Extends a partial assignment on generators to a homomorphism table by
// closing under + and *; nullopt on conflict.
std::optional<std::vector<Elem>> extend_hom(const Ring& r, const std::vector<Elem>& gens,
                                            const std::vector<Elem>& images) {
    constexpr std::int64_t kUnset = -1;
    std::vector<std::int64_t> map(r.size(), kUnset);
    std::vector<Elem> known;
    auto assign = [&](Elem x, Elem v) -> bool {
        if (map[x] == kUnset) {
            map[x] = v;
            known.push_back(x);
            return true;
        }
        return map[x] == static_cast<std::int64_t>(v);
    };
    if (!assign(0, 0) || !assign(r.one(), r.one())) return std::nullopt;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!assign(gens[i], images[i])) return std::nullopt;
    for (std::size_t i = 0; i < known.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Elem a = known[i], b = known[j];
            Elem fa = static_cast<Elem>(map[a]), fb = static_cast<Elem>(map[b]);
            if (!assign(r.add(a, b), r.add(fa, fb))) return std::nullopt;
            if (!assign(r.mul(a, b), r.mul(fa, fb))) return std::nullopt;
        }
    std::vector<Elem> table(r.size());
    for (std::size_t a = 0; a < r.size(); ++a) {
        if (map[a] == kUnset) return std::nullopt;
        table[a] = static_cast<Elem>(map[a]);
    }
    return table;
}

}  // namespace

std::vector<RingHom> ring_automorphisms(const Ring& r, std::size_t budget) {
    std::vector<Elem> gens;
    auto in = generated_subring(r, gens);
    for (Elem x = 0; x < r.size(); ++x) {
        if (in[x]) continue;
        gens.push_back(x);
        in = generated_subring(r, gens);
    }
    std::size_t candidates = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        candidates *= r.size();
        if (candidates > budget)
            throw UnsupportedError("automorphism search over " + r.spec() + " exceeds budget");
    }
    std::vector<RingHom> out;
    std::vector<Elem> images(gens.size(), 0);
    for (std::size_t code = 0; code < candidates; ++code) {
        std::size_t c = code;
        for (auto& im : images) {
            im = static_cast<Elem>(c % r.size());
            c /= r.size();
        }
        auto table = extend_hom(r, gens, images);
        if (!table) continue;
        RingHom h{r, r, std::move(*table)};
        if (h.bijective()) out.push_back(std::move(h));
    }
    std::stable_sort(out.begin(), out.end(), [](const RingHom& a, const RingHom& b) {
        bool ia = std::is_sorted(a.table.begin(), a.table.end());
        bool ib = std::is_sorted(b.table.begin(), b.table.end());
        if (ia != ib) return ia;
        return a.table < b.table;
    });
    return out;
}

std::optional<std::string> check_ring_axioms(const Ring& r) {
    const Elem n = static_cast<Elem>(r.size());
    for (Elem a = 0; a < n; ++a) {
        if (r.add(a, 0) != a) return "additive identity fails at " + r.format(a);
        if (r.mul(a, r.one()) != a) return "multiplicative identity fails at " + r.format(a);
        if (r.add(a, r.neg(a)) != 0) return "additive inverse fails at " + r.format(a);
        for (Elem b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a)) return "addition not commutative";
            if (r.mul(a, b) != r.mul(b, a)) return "multiplication not commutative";
            for (Elem c = 0; c < n; ++c) {
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "addition not associative";
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplication not associative";
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "distributivity fails";
            }
        }
    }
    return std::nullopt;
}

}  // namespace chev
