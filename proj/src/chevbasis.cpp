#include "chev/chevbasis.hpp"

#include <boost/rational.hpp>
#include <functional>
#include <map>

namespace chev {

namespace {

using Q = boost::rational<std::int64_t>;

void add_term(std::map<std::size_t, std::int64_t>& acc, std::size_t u, std::int64_t c) {
    if (c == 0) return;
    auto& v = acc[u];
    v += c;
    if (v == 0) acc.erase(u);
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(std::shared_ptr<const RootSystem> roots)
    : roots_(std::move(roots)), rank_(roots_->rank()) {
    const RootSystem& R = *roots_;
    const std::size_t n = R.size();
    std::vector<std::optional<Q>> memo(n * n);
    std::vector<char> busy(n * n, 0);

    std::function<Q(std::size_t, std::size_t)> get = [&](std::size_t a, std::size_t b) -> Q {
        auto s = R.sum(a, b);
        if (!s) return Q(0);
        auto& slot = memo[a * n + b];
        if (slot) return *slot;
        if (busy[a * n + b]) throw RootSystemError("cyclic dependency while fixing structure constants");
        busy[a * n + b] = 1;
        Q val;
        const std::int64_t p1 = string_p(a, b) + 1;
        if (R.is_positive(a) && R.is_positive(b)) {
            if (a > b) {
                val = -get(b, a);
            } else {
                auto [g, d] = extraspecial_pair(*s);
                if (g == a && d == b) {
                    val = Q(p1);
                } else {
                    // Four-root identity with a + b + (-g) + (-d) = 0.
                    std::size_t mg = R.neg(g), md = R.neg(d);
                    Q xi = Q(R.inner(*s, *s));
                    Q rhs = 0;
                    if (auto bg = R.sum(b, mg)) rhs -= get(b, mg) * get(a, md) / Q(R.inner(*bg, *bg));
                    if (auto ag = R.sum(mg, a)) rhs -= get(mg, a) * get(b, md) / Q(R.inner(*ag, *ag));
                    val = xi * rhs / get(mg, md);
                }
            }
        } else if (!R.is_positive(a) && !R.is_positive(b)) {
            val = Q(-p1 * p1) / get(R.neg(a), R.neg(b));
        } else {
            // a + b + c = 0: N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
            std::size_t c = R.neg(*s);
            Q cc = R.inner(c, c);
            if (R.is_positive(c) == R.is_positive(a))
                val = cc / Q(R.inner(b, b)) * get(c, a);
            else
                val = cc / Q(R.inner(a, a)) * get(b, c);
        }
        busy[a * n + b] = 0;
        slot = val;
        return val;
    };

    n_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Q v = get(a, b);
            if (v.denominator() != 1) throw RootSystemError("non-integral structure constant");
            n_[a * n + b] = v.numerator();
        }
    if (auto err = check_jacobi()) throw RootSystemError("Chevalley basis construction failed: " + *err);
}

std::string ChevalleyBasis::basis_label(std::size_t u) const {
    if (!is_root_vector(u)) return "h" + std::to_string(u + 1);
    return "x[" + roots_->root_name(root_of(u)) + "]";
}

std::int64_t ChevalleyBasis::string_p(std::size_t a, std::size_t b) const {
    const RootSystem& R = *roots_;
    IVec cur = R.coords(b);
    std::int64_t p = 0;
    while (true) {
        for (std::size_t k = 0; k < cur.size(); ++k) cur[k] -= R.coords(a)[k];
        if (!R.find(cur)) return p;
        ++p;
    }
}

std::pair<std::size_t, std::size_t> ChevalleyBasis::extraspecial_pair(std::size_t root) const {
    const RootSystem& R = *roots_;
    for (std::size_t a = 0; a < R.num_positive(); ++a)
        for (std::size_t b = a + 1; b < R.num_positive(); ++b) {
            auto s = R.sum(a, b);
            if (s && *s == root) return {a, b};
        }
    throw RootSystemError("root " + R.root_name(root) + " has no special pair");
}

LieVec ChevalleyBasis::bracket(std::size_t u, std::size_t v) const {
    const RootSystem& R = *roots_;
    LieVec out;
    bool ru = is_root_vector(u), rv = is_root_vector(v);
    if (!ru && !rv) return out;
    if (!ru && rv) {
        std::int64_t c = R.pairing(root_of(v), R.simple(static_cast<int>(u)));
        if (c) out.emplace_back(v, c);
        return out;
    }
    if (ru && !rv) {
        std::int64_t c = R.pairing(root_of(u), R.simple(static_cast<int>(v)));
        if (c) out.emplace_back(u, -c);
        return out;
    }
    std::size_t a = root_of(u), b = root_of(v);
    if (R.neg(a) == b) {
        IVec h = coroot_h(a);
        for (int i = 0; i < rank_; ++i)
            if (h[i]) out.emplace_back(h_index(i), h[i]);
        return out;
    }
    if (auto s = R.sum(a, b)) out.emplace_back(x_index(*s), N(a, b));
    return out;
}

std::optional<std::string> ChevalleyBasis::check_jacobi() const {
    const std::size_t d = dim();
    auto br = [&](const LieVec& x, std::size_t w, std::map<std::size_t, std::int64_t>& acc, std::int64_t sign) {
        for (auto [u, c] : x)
            for (auto [t, e] : bracket(u, w)) add_term(acc, t, sign * c * e);
    };
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
            LieVec uv = bracket(u, v), vu = bracket(v, u);
            std::map<std::size_t, std::int64_t> anti;
            for (auto [t, c] : uv) add_term(anti, t, c);
            for (auto [t, c] : vu) add_term(anti, t, c);
            if (!anti.empty()) return "antisymmetry fails for (" + basis_label(u) + ", " + basis_label(v) + ")";
        }
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = u + 1; v < d; ++v) {
            LieVec uv = bracket(u, v);
            for (std::size_t w = v + 1; w < d; ++w) {
                // [[u,v],w] + [[v,w],u] + [[w,u],v] = 0
                std::map<std::size_t, std::int64_t> acc;
                br(uv, w, acc, 1);
                br(bracket(v, w), u, acc, 1);
                br(bracket(w, u), v, acc, 1);
                if (!acc.empty())
                    return "Jacobi identity fails for (" + basis_label(u) + ", " + basis_label(v) + ", " +
                           basis_label(w) + ")";
            }
        }
    return std::nullopt;
}

IntMat ChevalleyBasis::ad(std::size_t u) const {
    IntMat m(dim());
    for (std::size_t v = 0; v < dim(); ++v)
        for (auto [t, c] : bracket(u, v)) m(t, v) += c;
    return m;
}

IntMat ChevalleyBasis::killing_form() const {
    std::vector<IntMat> ads;
    for (std::size_t u = 0; u < dim(); ++u) ads.push_back(ad(u));
    IntMat k(dim());
    for (std::size_t u = 0; u < dim(); ++u)
        for (std::size_t v = u; v < dim(); ++v) {
            std::int64_t t = (ads[u] * ads[v]).trace();
            k(u, v) = t;
            k(v, u) = t;
        }
    return k;
}

std::vector<std::int64_t> ChevalleyBasis::graph_signs(const std::vector<std::size_t>& perm) const {
    const RootSystem& R = *roots_;
    const std::size_t n = R.size();
    std::vector<std::int64_t> eps(n, 0);
    for (int i = 0; i < rank_; ++i) {
        eps[R.simple(i)] = 1;
        eps[R.neg(R.simple(i))] = 1;
    }
    // e(a + b) N_{a,b} = e(a) e(b) N_{d a, d b}, propagated by height.
    for (std::size_t r = 0; r < R.num_positive(); ++r) {
        if (eps[r]) continue;
        bool done = false;
        for (int i = 0; i < rank_ && !done; ++i) {
            std::size_t ai = R.simple(i);
            IVec c = R.coeffs(r);
            c[i] -= 1;
            auto rest = R.find_by_coeffs(c);
            if (!rest || !R.is_positive(*rest)) continue;
            std::int64_t lhs = N(ai, *rest), rhs = N(perm[ai], perm[*rest]);
            if (lhs == 0 || (rhs != lhs && rhs != -lhs)) throw RootSystemError("permutation is not a diagram symmetry");
            eps[r] = eps[ai] * eps[*rest] * (rhs / lhs);
            done = true;
        }
        eps[R.neg(r)] = eps[r];
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto s = R.sum(a, b);
            if (!s) continue;
            if (eps[*s] * N(a, b) != eps[a] * eps[b] * N(perm[a], perm[b]))
                throw RootSystemError("graph signs are inconsistent");
        }
    return eps;
}

}  // namespace chev
